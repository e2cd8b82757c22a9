class LedgerError(Exception):
    """ Exception to notify issues on the simulated blockchain """
    def __init__(self, message):
        Exception.__init__(self, message)
        self.message = message


class VerificationFailed(LedgerError):
    """ Uploaded weights rejected by the miner """


class IncompleteRound(LedgerError):
    """ Fewer blocks than participants for a global iteration """


class ChainFormatError(LedgerError):
    """ Chain file can not be decoded """
