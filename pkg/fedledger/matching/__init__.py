class MatchingError(Exception):
    """ Exception to notify issues in the miner-MC association """
    def __init__(self, message):
        Exception.__init__(self, message)
        self.message = message


class NoFeasiblePairs(MatchingError):
    """ No (MC, miner) pair can be associated, at least one association is required """


class InstanceTooLarge(MatchingError):
    """ Exhaustive enumeration refused on a large instance """


# Preference orientations
AS_WRITTEN = 'as_written'  # MCs rank miners by miner utility, miners rank MCs by MC utility
SELF_UTILITY = 'self_utility'  # each side ranks by its own utility

orientations = (AS_WRITTEN, SELF_UTILITY)
