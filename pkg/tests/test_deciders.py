import itertools

import pytest
from hypothesis import given, settings

from eqred.deciders import PreconditionViolated, decide, greedy_embedding, refutation_condition
from eqred.oracle import enumerate_relations, oracle_decide
from eqred.relcore import FiniteEqRel, ReductionKind, SizeProfile, classify_map, kind_satisfied

from conftest import relations

K = ReductionKind
v = SizeProfile.from_vector


def rel(*vector):
    return v(list(vector)).expand()


@pytest.mark.parametrize("kind, E, F, exists", [
    (K.EMBEDDING, (1, 0, 1), (0, 2), False),
    (K.INVARIANT_REDUCTION, (1,), (0, 1), False),
    (K.SURJECTIVE_REDUCTION, (0, 1), (1,), True),
    (K.FULL_EMBEDDING, (1,), (0, 1), True),
    (K.EMBEDDING, (1, 0, 1), (0, 1, 1), True),
    (K.REDUCTION, (2,), (1,), False),
    (K.ISOMORPHISM, (2, 1), (1, 0, 1), False),
    (K.INVARIANT_EMBEDDING, (1,), (2,), True),
    (K.FULL_REDUCTION, (1, 0, 1), (0, 2), True),
])
def test_small_decisions(kind, E, F, exists):
    assert decide(kind, rel(*E), rel(*F)).exists is exists


def test_embedding_refutation_names_first_kappa():
    r = decide(K.EMBEDDING, rel(1, 0, 1), rel(0, 2)).reason
    assert (r.clause, r.kappa, r.lhs, r.rhs) == ("n_≥", 3, 1, 0)
    assert str(r) == "n_≥3: 1 > 0"


def test_invariant_reduction_refutation():
    r = refutation_condition(K.INVARIANT_REDUCTION, rel(1), rel(0, 1))
    assert (r.clause, r.kappa, r.lhs, r.rhs) == ("n_≤", 1, 1, 0)


def test_reduction_refutation_uses_quotients():
    r = refutation_condition(K.REDUCTION, rel(2), rel(1))
    assert r.clause == "classes" and r.kappa is None and (r.lhs, r.rhs) == (2, 1)


def test_refutation_requires_nonexistence():
    with pytest.raises(PreconditionViolated):
        refutation_condition(K.REDUCTION, rel(1), rel(1))


def test_greedy_embedding_example():
    E, F = rel(1, 0, 1), rel(0, 1, 1)
    phi = greedy_embedding(E, F)
    assert phi is not None
    flags = classify_map(E, F, phi)
    assert flags.inj and flags.class_inj
    assert greedy_embedding(rel(1, 0, 1), rel(0, 2)) is None


def test_greedy_ties_broken_by_class_index():
    E = FiniteEqRel.from_classes([[0], [1]])
    F = FiniteEqRel.from_classes([[0], [1], [2]])
    assert greedy_embedding(E, F).target == (0, 1)


UNIVERSE_4 = enumerate_relations(4, include_empty=True)


@pytest.mark.parametrize("kind", list(K))
def test_decisions_match_oracle_on_ground_four(kind):
    for pe, pf in UNIVERSE_4.pairs():
        E, F = pe.expand(), pf.expand()
        got = decide(kind, E, F)
        assert got.exists == oracle_decide(kind, E, F), (kind, pe, pf)
        if got.exists:
            assert kind_satisfied(kind, classify_map(E, F, got.witness))
        else:
            assert got.reason is not None


@given(relations(max_ground=6), relations(max_ground=6))
@settings(max_examples=300)
def test_witnesses_are_sound(E, F):
    for kind in K:
        d = decide(kind, E, F)
        if d.exists:
            assert kind_satisfied(kind, classify_map(E, F, d.witness))


@given(relations(max_ground=6), relations(max_ground=6))
@settings(max_examples=300)
def test_full_embedding_mirrors_surjective_reduction(E, F):
    assert decide(K.FULL_EMBEDDING, E, F).exists == decide(K.SURJECTIVE_REDUCTION, F, E).exists


@given(relations(max_ground=6), relations(max_ground=6), relations(max_ground=6))
@settings(max_examples=200)
def test_every_kind_is_transitive(A, B, C):
    for kind in K:
        if decide(kind, A, B).exists and decide(kind, B, C).exists:
            assert decide(kind, A, C).exists


@given(relations(max_ground=6), relations(max_ground=6))
@settings(max_examples=200)
def test_stronger_kinds_imply_weaker(E, F):
    for strong, weak in itertools.permutations(K, 2):
        if weak.required <= strong.required and decide(strong, E, F).exists:
            assert decide(weak, E, F).exists


@given(relations(max_ground=6, min_ground=1), relations(max_ground=6, min_ground=1))
def test_adding_a_target_class_keeps_embeddings(E, F):
    bigger = FiniteEqRel(F.ground_size + 1, F.class_of + (F.num_classes,))
    if decide(K.EMBEDDING, E, F).exists:
        assert decide(K.EMBEDDING, E, bigger).exists
