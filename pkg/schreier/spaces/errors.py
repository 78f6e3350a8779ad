"""
Domain errors raised by ``schreier.spaces``.

Every error carries a stable ``code`` (the class name) and a mapping
of ``details`` so that the command line can serialize it.

>>> err = NotAMember(set=[1, 2], alpha='1')
>>> err.code
'NotAMember'
>>> err.as_dict() == {'code': 'NotAMember', 'set': [1, 2], 'alpha': '1'}
True
>>> isinstance(err, ValueError)
True
"""


class SchreierError(ValueError):
    """
    Base for all domain errors.
    """

    message = "domain error"

    def __init__(self, message=None, **details):
        self.details = details
        super().__init__(message or self.message)

    @property
    def code(self):
        return self.__class__.__name__

    def as_dict(self):
        return dict(code=self.code, **self.details)


class NotALimit(SchreierError):
    message = "ordinal is not a limit"


class NotSuccessor(SchreierError):
    message = "ordinal is not a successor"


class NotAMember(SchreierError):
    message = "set is not a member of the family"


class NotMaximal(SchreierError):
    message = "set is not maximal in the family"


class NotASpread(SchreierError):
    message = "image is not a spread of the set"


class InternalInconsistency(SchreierError):
    message = "internal consistency check failed"


class ResourceLimit(SchreierError):
    message = "configured budget exceeded"


class SignsMissing(SchreierError):
    message = "sign sequence does not cover the support"


class NotOnSphere(SchreierError):
    message = "vector is not on the unit sphere"


class MissingBasisPair(SchreierError):
    message = "table has no entry for a basis vector"


class NotDiagonal(SchreierError):
    message = "basis vector is not mapped to a signed copy of itself"


class IsPlusMinusE1(SchreierError):
    message = "no witness exists for u = ±e_1"


class WeightsNotNormalized(SchreierError):
    message = "weights must be positive and sum to 1"


class InexactRoot(SchreierError):
    message = "weight has no rational p-th root"


class ConstructionFailed(SchreierError):
    message = "witness construction failed"


class ExcludedInput(SchreierError):
    message = "input is excluded by the statement being checked"


class UnsupportedOrder(SchreierError):
    message = "operation is not available for this order"


class OracleDisagreement(SchreierError):
    message = "fast path and reference oracle disagree"
