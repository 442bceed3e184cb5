"""Exception hierarchy.

Every error that the CLI maps to an exit code derives from one of three
bases: :class:`VerificationError` (exit 1), :class:`BudgetExceeded` (exit 2)
and :class:`ConfigError` (exit 3).
"""


class HomcxError(Exception):
    pass


class ConfigError(HomcxError):
    pass


class VerificationError(HomcxError):
    """A checked identity or bijection failed. ``witness`` carries details."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(HomcxError):
    pass


# core-groups
class UnknownCatalogName(ConfigError):
    pass


class InvalidGroupFile(ConfigError):
    pass


class GeneratorIndexOutOfRange(HomcxError, IndexError):
    pass


class NotASubgroup(HomcxError, ValueError):
    pass


# symbolic words
class SizeGuardExceeded(BudgetExceeded):
    pass


class RankMismatch(HomcxError, ValueError):
    pass


# cosimplicial
class UnsupportedFamilyParameter(ConfigError):
    pass


class LevelOutOfRange(ConfigError):
    pass


class IdentityViolation(VerificationError):
    pass


class UndecidableLevel(HomcxError):
    pass


class CocycleNotVerified(VerificationError):
    pass


class CommutationFailure(VerificationError):
    pass


# homspace
class ImageNotAHomomorphism(VerificationError):
    pass


class SimplicialIdentityViolation(VerificationError):
    pass


class BijectionFailure(VerificationError):
    pass


class EquivarianceViolation(VerificationError):
    pass


class PullbackFailure(VerificationError):
    pass


class PredicateDisagreement(VerificationError):
    pass


# homology
class BoundarySquareNonzero(VerificationError):
    pass


# irig
class DimensionMismatch(HomcxError, ValueError):
    pass


class DiagramFailure(VerificationError):
    pass
