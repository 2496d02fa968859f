class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class WordParseError(DomainError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
