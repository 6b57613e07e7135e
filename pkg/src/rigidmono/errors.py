"""Exception hierarchy shared by all modules.

Every mathematical precondition failure derives from MathError and carries a
stable machine-readable ``code``; the CLI maps MathError to exit status 2 and
BudgetExceeded to exit status 3.
"""


class MathError(Exception):
    """A mathematical precondition was violated."""

    code = "math-error"


class InvalidConductor(MathError):
    code = "invalid-conductor"


class InvalidAutomorphism(MathError):
    code = "invalid-automorphism"


class FieldMismatch(MathError):
    code = "field-error"


class ShapeError(MathError):
    code = "shape-error"


class NotInvertible(MathError):
    code = "not-invertible"


class RelationViolation(MathError):
    code = "relation-violation"


class NotApplicable(MathError):
    code = "not-applicable"


class NotOnModuli(MathError):
    code = "not-on-moduli"


class NotInComponent(MathError):
    code = "not-in-component"


class NotQuasiUnipotent(MathError):
    code = "not-quasi-unipotent"


class Indeterminate(MathError):
    code = "indeterminate"


class BudgetExceeded(Exception):
    """A configured size or work budget was exceeded."""

    code = "budget-exceeded"


class SchemaError(Exception):
    """Input does not match the declared JSON schema."""

    code = "schema-error"
