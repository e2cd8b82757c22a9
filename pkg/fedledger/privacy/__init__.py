class PrivacyError(Exception):
    """ Exception to notify issues in differentially private training """
    def __init__(self, message):
        Exception.__init__(self, message)
        self.message = message


class InvalidBudget(PrivacyError):
    """ Privacy budget outside its domain """


class DimensionMismatch(PrivacyError):
    """ Sample dimension does not match the model input """


class EmptyBatch(PrivacyError):
    """ Training step requested on an empty batch or data set """
