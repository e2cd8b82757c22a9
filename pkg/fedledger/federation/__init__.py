class FederationError(Exception):
    """ Exception to notify issues in the federated training loop """
    def __init__(self, message):
        Exception.__init__(self, message)
        self.message = message


class LengthMismatch(FederationError):
    """ Local weight vectors of different lengths """


class WeightSumViolation(FederationError):
    """ Aggregation weights do not sum to one """


class EmptyFederation(FederationError):
    """ No participant to train or evaluate """
