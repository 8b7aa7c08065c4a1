"""Exception hierarchy shared by all modules."""


class CoxGrowthError(Exception):
    """Base class for every domain failure raised by this package."""


class PoleAtOrigin(CoxGrowthError):
    pass


class NotFound(CoxGrowthError):
    """No root in the requested interval."""


class NotGrowthFunction(CoxGrowthError):
    pass


class NotMonic(CoxGrowthError):
    pass


class ZeroRoot(CoxGrowthError):
    pass


class PreconditionError(CoxGrowthError):
    pass


class NotFinite(CoxGrowthError):
    pass


class OracleTooLarge(CoxGrowthError):
    pass


class ValidationError(CoxGrowthError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotContractible(CoxGrowthError):
    pass


class AndreevFailure(CoxGrowthError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotCompact(CoxGrowthError):
    pass


class NotAdmissible(CoxGrowthError):
    pass


class InternalInconsistency(CoxGrowthError):
    """A check that theory says cannot fail has failed."""
