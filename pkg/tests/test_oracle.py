import pytest

from eqred.oracle import (
    BoundExceeded,
    BudgetExceeded,
    achievable_flags,
    census,
    enumerate_relations,
    integer_partitions,
    iter_homomorphisms,
    oracle_decide,
    oracle_witness,
)
from eqred.relcore import FiniteEqRel, ReductionKind, SizeProfile, canonical_profile, classify_map, kind_satisfied

K = ReductionKind
v = SizeProfile.from_vector


def test_partition_counts():
    assert [len(list(integer_partitions(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_enumerate_two():
    U = enumerate_relations(2)
    assert {p.to_spec() for p in U.relations} == {"<1>", "<2>", "<0,1>"}


def test_enumerate_counts_isomorphism_types():
    assert len(enumerate_relations(5)) == 18
    assert len(enumerate_relations(5, include_empty=True)) == 19


def test_enumerate_refuses_large_bound():
    with pytest.raises(BoundExceeded):
        enumerate_relations(8)


def test_every_map_between_two_fours_is_tried():
    E, F = v([4]).expand(), v([4]).expand()
    seen = sum(1 for _ in iter_homomorphisms(E, F))
    assert seen == 4**4  # E is discrete, so every map is a homomorphism


def test_budget_is_enforced():
    E = v([7]).expand()
    with pytest.raises(BudgetExceeded):
        oracle_decide(K.REDUCTION, E, E, budget=1000)


@pytest.mark.parametrize("pe", enumerate_relations(4).relations)
@pytest.mark.parametrize("pf", enumerate_relations(4).relations)
def test_isomorphism_iff_equal_profiles(pe, pf):
    assert oracle_decide(K.ISOMORPHISM, pe, pf) == (pe == pf)


def test_oracle_witness_is_valid():
    E, F = v([1, 0, 1]).expand(), v([0, 1, 1]).expand()
    phi = oracle_witness(K.EMBEDDING, E, F)
    assert kind_satisfied(K.EMBEDDING, classify_map(E, F, phi))
    assert oracle_witness(K.EMBEDDING, E, v([0, 2]).expand()) is None


def test_flags_respect_surjectivity_identity():
    for pe, pf in enumerate_relations(4).pairs():
        for f in achievable_flags(pe.expand(), pf.expand()):
            assert f.consistent()


def test_relabelled_relations_give_same_answers():
    A = FiniteEqRel.from_labels([0, 1, 0, 2])
    B = FiniteEqRel.from_labels([2, 2, 1, 0])
    assert canonical_profile(A) == canonical_profile(B)
    F = v([0, 1, 1]).expand()
    for kind in K:
        assert oracle_decide(kind, A, F) == oracle_decide(kind, B, F)


def test_census_small():
    bound, history = census(limit=4)
    assert bound == 4 and history[-1] == 16
