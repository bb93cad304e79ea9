import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eqred.relcore import (
    FiniteEqRel,
    MapWitness,
    NotAHomomorphism,
    ParseError,
    PropertyFlags,
    ReductionKind,
    SizeProfile,
    canonical_profile,
    classify_map,
    kind_satisfied,
    profile_counts,
)

from conftest import relations

K = ReductionKind


def test_empty_relation_has_empty_profile():
    rel = FiniteEqRel(0, ())
    assert rel.num_classes == 0
    assert canonical_profile(rel) == SizeProfile()


def test_vector_notation_profile(v):
    assert canonical_profile(v([1, 0, 1]).expand()).as_dict() == {1: 1, 3: 1}


def test_explicit_classes_profile():
    rel = FiniteEqRel.from_classes([[0, 1], [2]])
    assert canonical_profile(rel).as_dict() == {1: 1, 2: 1}


def test_class_indices_must_be_contiguous():
    with pytest.raises(ValueError):
        FiniteEqRel(2, (0, 2))
    with pytest.raises(ValueError):
        FiniteEqRel(3, (0, 1))


@pytest.mark.parametrize("profile, kappa, expected", [
    ({1: 1, 3: 1}, 3, (1, 2, 1)),
    ({1: 1, 3: 1}, 2, (0, 1, 1)),
    ({1: 2}, 1, (2, 2, 2)),
])
def test_profile_counts(profile, kappa, expected):
    assert profile_counts(SizeProfile(tuple(profile.items())), kappa) == expected


def test_profile_counts_on_two_pairs():
    # <0,2>: two classes of size 2
    assert profile_counts(SizeProfile.from_vector([0, 2]), 1) == (0, 0, 2)


def test_profile_counts_rejects_zero():
    with pytest.raises(ValueError):
        profile_counts(SizeProfile.from_vector([1]), 0)


@given(relations(max_ground=7))
def test_counts_split_the_classes(rel):
    p = rel.profile()
    for kappa in range(1, p.max_size + 2):
        assert profile_counts(p, kappa)[1] + profile_counts(p, kappa + 1)[2] == p.num_classes


@given(relations(max_ground=7), st.randoms(use_true_random=False))
def test_profile_is_isomorphism_invariant(rel, rnd):
    perm = list(range(rel.ground_size))
    rnd.shuffle(perm)
    relabel = list(range(rel.num_classes))
    rnd.shuffle(relabel)
    moved = [0] * rel.ground_size
    for x, c in enumerate(rel.class_of):
        moved[perm[x]] = relabel[c]
    assert canonical_profile(FiniteEqRel.from_labels(moved)) == canonical_profile(rel)


@pytest.mark.parametrize("text, vector", [
    ("<1,0,1>", [1, 0, 1]),
    (" < 2 > ", [2]),
    ("<>", []),
    ('{"classes": [3, 1]}', [1, 0, 1]),
])
def test_parse_relation_specs(text, vector):
    assert SizeProfile.parse(text).to_vector() == vector


@pytest.mark.parametrize("text, position", [
    ("<1,x>", 3),
    ("1,2>", 0),
    ("<1,2", 4),
    ("<1,>", 3),
    ("<1>2", 3),
])
def test_parse_errors_name_position(text, position):
    with pytest.raises(ParseError) as info:
        SizeProfile.parse(text)
    assert info.value.position == position


@given(relations(max_ground=8))
def test_spec_round_trip(rel):
    p = rel.profile()
    assert SizeProfile.parse(p.to_spec()) == p
    assert SizeProfile.from_json(p.to_json()) == p
    assert p.expand().profile() == p


def test_expansion_is_nondecreasing(v):
    assert v([1, 0, 1]).expand().class_of == (0, 1, 1, 1)


def test_identity_on_singletons_has_every_flag():
    E = FiniteEqRel.from_classes([[0], [1]])
    flags = classify_map(E, E, MapWitness(2, (0, 1)))
    assert flags.as_tuple() == (True,) * 5


def test_identity_merging_two_classes():
    E = FiniteEqRel.from_classes([[0], [1]])
    F = FiniteEqRel.from_classes([[0, 1]])
    assert classify_map(E, F, MapWitness(2, (0, 1))).as_tuple() == (True, True, False, True, True)


def test_splitting_a_class_is_not_a_homomorphism():
    E = FiniteEqRel.from_classes([[0, 1]])
    F = FiniteEqRel.from_classes([[0], [1]])
    with pytest.raises(NotAHomomorphism):
        classify_map(E, F, MapWitness(2, (0, 1)))


def test_classify_checks_ranges():
    E = FiniteEqRel.from_classes([[0]])
    with pytest.raises(ValueError):
        classify_map(E, E, MapWitness(1, (1,)))
    with pytest.raises(ValueError):
        classify_map(E, E, MapWitness(0, ()))


@given(relations(max_ground=4), relations(max_ground=4), st.randoms(use_true_random=False))
def test_onto_iff_class_onto_and_invariant(E, F, rnd):
    if F.ground_size == 0 and E.ground_size:
        return
    phi = MapWitness(E.ground_size, tuple(rnd.randrange(F.ground_size) for _ in range(E.ground_size)))
    try:
        flags = classify_map(E, F, phi)
    except NotAHomomorphism:
        return
    assert flags.consistent()


def _flags(**on):
    names = ("inj", "surj", "class_inj", "class_surj", "range_invariant")
    return PropertyFlags(**{n: on.get(n, False) for n in names})


def test_kind_satisfied_examples():
    assert kind_satisfied(K.REDUCTION, _flags(class_inj=True))
    assert not kind_satisfied(K.SURJECTIVE_REDUCTION, _flags(class_inj=True, class_surj=True, range_invariant=True))
    every = PropertyFlags(True, True, True, True, True)
    assert all(kind_satisfied(k, every) for k in K)


@pytest.mark.parametrize("kind, required", [
    (K.REDUCTION, {"class_inj"}),
    (K.EMBEDDING, {"inj", "class_inj"}),
    (K.SURJECTIVE_REDUCTION, {"surj", "class_inj", "class_surj", "range_invariant"}),
    (K.ISOMORPHISM, {"inj", "surj", "class_inj", "class_surj", "range_invariant"}),
    (K.INVARIANT_REDUCTION, {"class_inj", "range_invariant"}),
    (K.FULL_REDUCTION, {"class_inj", "class_surj"}),
    (K.INVARIANT_EMBEDDING, {"inj", "class_inj", "range_invariant"}),
    (K.FULL_EMBEDDING, {"inj", "class_inj", "class_surj"}),
])
def test_kind_requires_exactly_its_flags(kind, required):
    assert kind.required == required
    names = ["inj", "surj", "class_inj", "class_surj", "range_invariant"]
    for missing in required:
        assert not kind_satisfied(kind, _flags(**{n: n in required and n != missing for n in names}))


@pytest.mark.parametrize("alias, kind", [
    ("inv-embedding", K.INVARIANT_EMBEDDING),
    ("full_reduction", K.FULL_REDUCTION),
    ("Surjective-Reduction", K.SURJECTIVE_REDUCTION),
    ("⊑ⁱ", K.INVARIANT_EMBEDDING),
])
def test_kind_aliases(alias, kind):
    assert ReductionKind.parse(alias) is kind


def test_random_labels_are_normalised():
    rnd = random.Random(3)
    for _ in range(50):
        labels = [rnd.randrange(5) for _ in range(rnd.randrange(8))]
        rel = FiniteEqRel.from_labels(labels)
        assert sorted(set(rel.class_of)) == list(range(rel.num_classes))
