"""Exception types shared across the library."""


class ReflexaError(Exception):
    """Base class for all library errors."""


class NonAssociativeError(ReflexaError):
    def __init__(self, i, j, k):
        self.witness = (i, j, k)
        super().__init__(f"associativity fails on basis triple {(i, j, k)}")


class BadUnitError(ReflexaError):
    def __init__(self, side, index):
        self.witness = (side, index)
        super().__init__(f"unit is not a two-sided identity ({side} on basis {index})")


class BadIdempotentsError(ReflexaError):
    def __init__(self, reason, witness=None):
        self.witness = witness
        super().__init__(f"bad idempotent set: {reason}")


class InfiniteDimensionalError(ReflexaError):
    def __init__(self, cycle):
        self.cycle = cycle
        super().__init__(
            f"the relations leave an unavoidable cycle (via arrows {list(cycle)}); "
            "the path basis is infinite"
        )


class NotBasicError(ReflexaError):
    pass


class SideMismatchError(ReflexaError):
    pass


class BudgetExceededError(ReflexaError):
    def __init__(self, kind, needed, budget):
        self.kind = kind
        self.needed = needed
        self.budget = budget
        super().__init__(f"{kind} needs {needed}, budget is {budget}")


class UndecidedError(ReflexaError):
    """An isomorphism/idempotent search exhausted its budget without a verdict."""

    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"undecided within search budget {budget}; raise the budget")


class ConditionFailsError(ReflexaError):
    def __init__(self, condition, side=None):
        self.condition = condition
        self.side = side
        where = f" on the {side} side" if side else ""
        super().__init__(f"required condition {condition} fails{where}")


class PreconditionUnverifiedError(ReflexaError):
    pass


class NotInDError(ReflexaError):
    def __init__(self, simple_index, sgrade_value):
        self.simple_index = simple_index
        self.sgrade_value = sgrade_value
        super().__init__(
            f"simple {simple_index} has strong grade {sgrade_value} < 2; "
            "it cannot generate an admissible Serre subcategory"
        )


class NotPairwiseNonisoError(ReflexaError):
    def __init__(self, i, j):
        self.witness = (i, j)
        super().__init__(f"summands {i} and {j} are isomorphic")


class TheoremViolationError(ReflexaError):
    """A certified theorem was contradicted by computation; this is a bug."""

    def __init__(self, what, witness):
        self.what = what
        self.witness = witness
        super().__init__(f"theorem consistency violated: {what}; witness: {witness}")
