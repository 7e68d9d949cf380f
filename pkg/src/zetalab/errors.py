"""Exception hierarchy shared by all zetalab modules."""


class ZetalabError(Exception):
    """Base class for every error raised by the package."""


class TermBudgetExceeded(ZetalabError):
    pass


class NonFinite(ZetalabError, ArithmeticError):
    pass


class NoConvergence(ZetalabError):
    pass


class PoleOnBoundary(ZetalabError):
    pass


class InvalidArgument(ZetalabError, ValueError):
    pass


class PoleAtOne(InvalidArgument):
    pass


class FactorizationBudgetExceeded(ZetalabError, OverflowError):
    pass


class DomainError(ZetalabError, ValueError):
    pass


class CancellationBudgetExceeded(ZetalabError):
    pass


class RootFindingFailure(ZetalabError):
    pass


class NoKappa(ZetalabError):
    pass


class DegenerateZ(ZetalabError, ValueError):
    pass


class PrecisionFloor(ZetalabError):
    pass
