class EconomicsError(Exception):
    """ Exception to notify issues in the economic and physical model """
    def __init__(self, message):
        Exception.__init__(self, message)
        self.message = message


class InvalidParameter(EconomicsError):
    """ A system or medical center parameter violates its domain """
    def __init__(self, field, message):
        EconomicsError.__init__(self, message)
        self.field = field


class ZeroRate(EconomicsError):
    """ Transmission time requested over a null data rate """


class ZeroTotalData(EconomicsError):
    """ Reward share requested against an empty data pool """
