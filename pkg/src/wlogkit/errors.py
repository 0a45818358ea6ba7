"""Exception types shared across wlogkit."""


class WlogkitError(Exception):
    """Base class for all errors raised by wlogkit."""


class InvalidInput(WlogkitError, ValueError):
    pass


class InvalidWlog(InvalidInput):
    pass


class BudgetExceeded(WlogkitError):
    """Exhaustive spanning-tree enumeration ran past its budget."""


class NotInCommutatorSubgroup(WlogkitError, ValueError):
    """A word with nonzero exponent sums was passed where a commutator-subgroup element is required."""


class NotCertifiedSimplyConnected(WlogkitError):
    def __init__(self, status):
        super().__init__(f"flag complex is not certified simply connected (gate status: {status})")
        self.status = status
