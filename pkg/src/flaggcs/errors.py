"""Exception hierarchy. Every rejection raised by the library is a ``FlagGCSError``."""


class FlagGCSError(ValueError):
    pass


class InvalidRootSystem(FlagGCSError):
    pass


class NotSimpleRoot(FlagGCSError):
    pass


class GroupTooLarge(FlagGCSError):
    def __init__(self, cap: int, reached: int):
        super().__init__(f"Weyl group exceeds cap {cap} (enumerated {reached} elements before stopping)")
        self.cap = cap
        self.reached = reached


class InvalidStructure(FlagGCSError):
    pass


class ConstructionError(FlagGCSError):
    def __init__(self, message: str, failing=()):
        super().__init__(message)
        self.failing = list(failing)


class ClassificationError(FlagGCSError):
    pass
