"""Exception types raised by validation and construction routines."""


class OscybeError(Exception):
    pass


class AntisymmetryViolation(OscybeError):
    def __init__(self, i, j):
        super().__init__(f"structure constants are not antisymmetric at pair ({i}, {j})")
        self.pair = (i, j)


class JacobiViolation(OscybeError):
    def __init__(self, i, j, k, residual):
        super().__init__(f"Jacobi identity fails at basis triple ({i}, {j}, {k})")
        self.triple = (i, j, k)
        self.residual = residual


class JacobiFailure(OscybeError):
    """Jacobi fails for a constructed dual bracket; carries the first
    violating triple (lexicographic) and the residual vector."""

    def __init__(self, i, j, k, residual):
        super().__init__(f"dual bracket violates Jacobi at triple ({i}, {j}, {k})")
        self.triple = (i, j, k)
        self.residual = residual


class NonPositiveLambda(OscybeError):
    pass


class UnsortedLambda(OscybeError):
    pass


class NotGeneric(OscybeError):
    pass


class NotInNormalForm(OscybeError):
    def __init__(self, residual_entries):
        super().__init__(f"bivector pairs the first dual coordinate with the symplectic block: {residual_entries}")
        self.residual_entries = residual_entries


class RNotInWedge2S(OscybeError):
    pass


class NotABialgebra(OscybeError):
    pass


class ConditionViolated(OscybeError):
    pass


class ConstraintViolated(OscybeError):
    pass


class StructureMismatch(OscybeError):
    pass


class FormulaMismatch(OscybeError):
    pass


class DegenerateForm(OscybeError):
    pass


class NotAdInvariant(OscybeError):
    def __init__(self, i, j, k):
        super().__init__(f"form is not ad-invariant at basis triple ({i}, {j}, {k})")
        self.triple = (i, j, k)


class DegenerateMetric(OscybeError):
    pass


class BadIndices(OscybeError):
    pass


class OverlappingIndices(OscybeError):
    pass


class NotIsotropic(OscybeError):
    pass


class DegenerateMu(OscybeError):
    pass


class ParseError(OscybeError):
    pass
