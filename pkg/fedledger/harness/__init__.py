class ConfigError(Exception):
    """ Exception to notify issues in an experiment configuration """
    def __init__(self, message):
        Exception.__init__(self, message)
        self.message = message


class ParseError(ConfigError):
    """ Configuration document can not be read or parsed """
    def __init__(self, message, line=None):
        ConfigError.__init__(self, message if line is None else 'line %d: %s' % (line, message))
        self.line = line


class ValidationError(ConfigError):
    """ Configuration value violates its domain """
    def __init__(self, field, message):
        ConfigError.__init__(self, '%s: %s' % (field, message))
        self.field = field
