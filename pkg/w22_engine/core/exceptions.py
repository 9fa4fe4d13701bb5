class W22Error(ValueError):
    """Base class for every error raised by the engine"""

    def details(self):
        """Structured data shipped next to the message on the wire"""
        return {}


class ParseError(W22Error):
    """Raised when text or a JSON record cannot be read"""


class DomainError(W22Error):
    """Raised when an operation's precondition does not hold"""


class TruncationError(DomainError):
    def __init__(self, index, order):
        super(TruncationError, self).__init__(
            'coefficient {index} lies beyond truncation order {order}'.format(
                index=index, order=order))
        self.index = index
        self.order = order

    def details(self):
        return {'index': self.index, 'order': self.order}


class ConsistencyError(AssertionError):
    """An internally computed object failed its own invariant"""
