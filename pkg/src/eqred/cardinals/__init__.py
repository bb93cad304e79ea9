"""Symbolic cardinals, infinite class-size profiles, counting conditions and certificates."""

from .arithmetic import ALEPH_0, Cardinal, OrdinalW2, aleph, card_compare, card_sum, is_kappa_multiple
from .certificates import (
    Assignment,
    BlockingCertificate,
    BlockRef,
    CertificateError,
    MatchCertificate,
    validate_blocking_certificate,
    validate_existence_certificate,
)
from .fixtures import Fixture, all_fixtures, load_fixture, symbolic_decide, verify_fixture
from .profiles import (
    AlephLimitFamily,
    ArithmeticFamily,
    ConditionVerdict,
    Point,
    SymbolicProfile,
    check_condition,
    profile_n,
)
