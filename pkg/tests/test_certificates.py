import itertools
import random

import pytest

from eqred.cardinals import (
    ALEPH_0,
    Cardinal,
    CertificateError,
    SymbolicProfile,
    load_fixture,
    verify_fixture,
)
from eqred.cardinals.certificates import (
    Assignment,
    BlockingCertificate,
    BlockRef,
    MatchCertificate,
    certificate_from_json,
    compute_neighbours,
    validate_blocking_certificate,
    validate_existence_certificate,
)
from eqred.cardinals.fixtures import FIXTURE_NAMES, accepts, symbolic_decide
from eqred.cardinals.profiles import ArithmeticFamily, Point
from eqred.deciders import decide
from eqred.oracle import enumerate_relations
from eqred.relcore import ReductionKind, SizeProfile

K = ReductionKind
v = SizeProfile.from_vector


def sym(*vector):
    return SymbolicProfile.from_size_profile(v(list(vector)))


def match(kind, *rows, direction=None):
    return MatchCertificate(kind, tuple(Assignment(BlockRef(*s), BlockRef(*t), Cardinal.parse(c)) for s, t, c in rows),
                            direction)


def invariant_of(fn):
    with pytest.raises(CertificateError) as info:
        fn()
    return info.value.invariant


def test_finite_blocking_example_accepted():
    cert = BlockingCertificate((BlockRef(0),), ())
    assert validate_blocking_certificate(sym(1), sym(0, 2), K.INVARIANT_REDUCTION, cert)


def test_blocking_an_embedding_with_large_targets_is_rejected():
    fx = load_fixture("aleph0-blocks-1-vs-2")
    cert = BlockingCertificate((BlockRef(0),), ())
    assert invariant_of(lambda: validate_blocking_certificate(fx.E, fx.F, K.EMBEDDING, cert)) == "neighbourhood"
    honest = BlockingCertificate((BlockRef(0),), (BlockRef(0), BlockRef(1)))
    assert invariant_of(lambda: validate_blocking_certificate(fx.E, fx.F, K.EMBEDDING, honest)) == "hall-inequality"


def test_blocking_needs_a_size_constraint():
    cert = BlockingCertificate((BlockRef(0),), ())
    assert invariant_of(lambda: validate_blocking_certificate(sym(2), sym(1), K.REDUCTION, cert)) == "kind"


def test_blocking_needs_sources():
    assert invariant_of(lambda: validate_blocking_certificate(sym(1), sym(1), K.EMBEDDING,
                                                              BlockingCertificate((), ()))) == "empty"


def test_point_match_accepted():
    assert validate_existence_certificate(sym(1, 0, 1), sym(0, 1, 1), match(K.EMBEDDING, ((0,), (0,), 1), ((1,), (1,), 1)))


@pytest.mark.parametrize("cert, invariant", [
    (match(K.EMBEDDING, ((0,), (0,), 1)), "source-exhaustion"),
    (match(K.EMBEDDING, ((0,), (0,), 1), ((1,), (0,), 1)), "size-relation"),
    (match(K.EMBEDDING, ((0,), (5,), 1), ((1,), (1,), 1)), "unknown-block"),
    (match(K.EMBEDDING, ((0,), (0,), 1), ((1,), (1,), 1), direction="source"), "direction"),
    (match(K.REDUCTION, ((0,), (1,), 1), ((1,), (1,), 1)), "target-capacity"),
    (match(K.FULL_REDUCTION, ((0,), (0,), 1), ((1,), (0,), 1)), "target-capacity"),
])
def test_match_rejections(cert, invariant):
    assert invariant_of(lambda: validate_existence_certificate(sym(1, 0, 1), sym(0, 1, 1), cert)) == invariant


def test_class_surjective_kinds_must_fill_targets():
    cert = match(K.FULL_REDUCTION, ((0,), (0,), 1))
    assert invariant_of(lambda: validate_existence_certificate(sym(1), sym(2), cert)) == "target-exhaustion"


def test_family_segments_must_have_equal_lengths():
    P = SymbolicProfile((ArithmeticFamily(1, 1, 1),))
    cert = match(K.INVARIANT_EMBEDDING, ((0, 0, 3), (0, 0, 4), 1))
    assert invariant_of(lambda: validate_existence_certificate(P, P, cert)) == "segment-length"


def test_unbounded_shift_breaks_equality_eventually():
    P = SymbolicProfile((ArithmeticFamily(1, 1, 1),))
    ok = match(K.EMBEDDING, ((0, 0, None), (0, 1, None), 1))
    assert validate_existence_certificate(P, P, ok)
    bad = match(K.INVARIANT_EMBEDDING, ((0, 0, None), (0, 1, None), 1))
    assert invariant_of(lambda: validate_existence_certificate(P, P, bad)) == "size-relation"


def test_family_into_aleph_point():
    PE = SymbolicProfile((ArithmeticFamily(1, 1, 1),))
    PF = SymbolicProfile((Point("aleph_0", "aleph_0"),))
    assert validate_existence_certificate(PE, PF, match(K.EMBEDDING, ((0, 0, None), (0,), 1)))
    assert invariant_of(lambda: validate_existence_certificate(
        PE, PF, match(K.INVARIANT_REDUCTION, ((0, 0, None), (0,), 1)))) == "size-relation"


def test_certificate_json_round_trip():
    cert = match(K.EMBEDDING, ((0, 0, None), (1,), "aleph_0"))
    kind, back = certificate_from_json(cert.to_json())
    assert kind is K.EMBEDDING and back.assignments == cert.assignments
    block = BlockingCertificate((BlockRef(0, 2, None),), (BlockRef(1),))
    data = {**block.to_json(), "kind": "inv-reduction"}
    assert certificate_from_json(data) == (K.INVARIANT_REDUCTION, block)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_certificates_accept_and_tampering_rejects(name):
    report = verify_fixture(load_fixture(name))
    assert report["ok"], report
    assert all(c["accepted"] and c.get("tampered_rejected", True) for c in report["certificates"])


def test_symbolic_decisions_on_blocks_fixture():
    fx = load_fixture("aleph0-blocks-1-vs-2")
    assert symbolic_decide(K.EMBEDDING, fx, "E") is True
    assert symbolic_decide(K.EMBEDDING, fx, "F") is True
    assert symbolic_decide(K.INVARIANT_REDUCTION, fx, "E") is False


def test_neighbours_of_aleph_sources():
    fx = load_fixture("aleph0-blocks-1-vs-2")
    assert compute_neighbours(fx.E, fx.F, K.INVARIANT_REDUCTION, [BlockRef(1)]) == {0: [(0, 0)], 1: [(0, 0)]}
    assert compute_neighbours(fx.E, fx.F, K.INVARIANT_REDUCTION, [BlockRef(0)]) == {}


# cross-checks against the finite deciders


def _entry_index(profile: SizeProfile):
    return {size: i for i, (size, _) in enumerate(profile.counts)}


def certificate_from_witness(kind, pe, pf):
    E, F = pe.expand(), pf.expand()
    phi = decide(kind, E, F).witness
    ie, jf = _entry_index(pe), _entry_index(pf)
    sizes_e, sizes_f = E.class_sizes(), F.class_sizes()
    tally = {}
    for c, members in enumerate(E.classes()):
        d = F.class_of[phi.target[members[0]]]
        key = (ie[sizes_e[c]], jf[sizes_f[d]])
        tally[key] = tally.get(key, 0) + 1
    return match(kind, *(((a,), (b,), n) for (a, b), n in sorted(tally.items())))


UNIVERSE = enumerate_relations(4)
MATCHABLE = [K.REDUCTION, K.EMBEDDING, K.SURJECTIVE_REDUCTION, K.ISOMORPHISM, K.INVARIANT_REDUCTION,
             K.FULL_REDUCTION, K.INVARIANT_EMBEDDING, K.FULL_EMBEDDING]
HALL_KINDS = [K.EMBEDDING, K.INVARIANT_REDUCTION, K.INVARIANT_EMBEDDING]


@pytest.mark.parametrize("kind", MATCHABLE)
def test_witness_certificates_are_accepted(kind):
    for pe, pf in UNIVERSE.pairs():
        if decide(kind, pe.expand(), pf.expand()).exists:
            cert = certificate_from_witness(kind, pe, pf)
            assert validate_existence_certificate(SymbolicProfile.from_size_profile(pe),
                                                  SymbolicProfile.from_size_profile(pf), cert), (pe, pf)


@pytest.mark.parametrize("kind", MATCHABLE)
def test_random_match_certificates_are_sound(kind):
    rnd = random.Random(kind.slug)
    accepted = 0
    for pe, pf in UNIVERSE.pairs():
        SE, SF = SymbolicProfile.from_size_profile(pe), SymbolicProfile.from_size_profile(pf)
        for _ in range(4):
            rows = []
            for i, (_, count) in enumerate(pe.counts):
                for _ in range(count):
                    rows.append(((i,), (rnd.randrange(len(pf.counts)),), 1))
            if accepts(SE, SF, kind, match(kind, *rows)):
                accepted += 1
                assert decide(kind, pe.expand(), pf.expand()).exists, (pe, pf)
    assert accepted


@pytest.mark.parametrize("kind", HALL_KINDS + [K.SURJECTIVE_REDUCTION, K.FULL_EMBEDDING])
def test_blocking_certificates_are_sound(kind):
    for pe, pf in UNIVERSE.pairs():
        SE, SF = SymbolicProfile.from_size_profile(pe), SymbolicProfile.from_size_profile(pf)
        for r in range(1, len(pe.counts) + 1):
            for subset in itertools.combinations(range(len(pe.counts)), r):
                sources = [BlockRef(i) for i in subset]
                nbrs = compute_neighbours(SE, SF, kind, sources)
                cert = BlockingCertificate(tuple(sources), tuple(BlockRef(j) for j in nbrs))
                if accepts(SE, SF, kind, cert):
                    assert not decide(kind, pe.expand(), pf.expand()).exists


@pytest.mark.parametrize("kind", HALL_KINDS)
def test_every_finite_non_reduction_has_a_blocking_set(kind):
    for pe, pf in UNIVERSE.pairs():
        if decide(kind, pe.expand(), pf.expand()).exists:
            continue
        SE, SF = SymbolicProfile.from_size_profile(pe), SymbolicProfile.from_size_profile(pf)
        found = False
        for r in range(1, len(pe.counts) + 1):
            for subset in itertools.combinations(range(len(pe.counts)), r):
                sources = [BlockRef(i) for i in subset]
                nbrs = compute_neighbours(SE, SF, kind, sources)
                found |= accepts(SE, SF, kind, BlockingCertificate(tuple(sources), tuple(BlockRef(j) for j in nbrs)))
        assert found, (kind, pe, pf)


def test_aleph_counts_supply():
    PE = SymbolicProfile((Point(1, "aleph_0"),))
    PF = SymbolicProfile((Point(1, 5),))
    cert = BlockingCertificate((BlockRef(0),), (BlockRef(0),))
    assert validate_blocking_certificate(PE, PF, K.EMBEDDING, cert)
    assert ALEPH_0 > Cardinal(5)
