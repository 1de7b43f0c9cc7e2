"""Exception hierarchy.

Every error raised for invalid input derives from :class:`FMZVError`, so
callers (and the command line front end) can catch one type and report
``ClassName: message``.
"""


class FMZVError(ValueError):
    """Base class for all input and precondition errors."""

    def describe(self) -> str:
        return f"{type(self).__name__}: {self}"


# tree structure
class NotATree(FMZVError):
    pass


class CircleTerminal(FMZVError):
    pass


class RootMissing(FMZVError):
    pass


class DuplicateVertexId(FMZVError):
    pass


class ReservedId(FMZVError):
    pass


class UnknownEdge(FMZVError):
    pass


class UnknownVertex(FMZVError):
    pass


class InvalidIndex(FMZVError):
    pass


# transforms
class NonzeroIndex(FMZVError):
    pass


class NoCircleEndpoint(FMZVError):
    pass


class NotDegreeTwoCircle(FMZVError):
    pass


class RootContraction(FMZVError):
    pass


class NotBulletBranch(FMZVError):
    pass


class RootSplit(FMZVError):
    pass


class NotEssentiallyPositive(FMZVError):
    pass


# reduction
class NotHarvestable(FMZVError):
    pass


class RootNotTerminal(FMZVError):
    pass


# words
class NotInYH(FMZVError):
    pass


# modular arithmetic
class NotPrime(FMZVError):
    pass


class EvenPrime(NotPrime):
    pass


class NotPIntegral(FMZVError):
    pass
