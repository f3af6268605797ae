class InvalidInputError(ValueError):
    """Raised when caller-supplied parameters are outside an operation's domain."""


class ConstructionError(RuntimeError):
    """Raised when a built cycle or path fails its own integrity check.

    This never signals bad user input; it means the construction code is wrong.
    """


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
