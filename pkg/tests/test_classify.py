import pytest

from lcmlattice import (
    AtomicLattice,
    Labeling,
    PreconditionError,
    atom_generator,
    check_strong_conditions,
    check_weak_conditions,
    classify,
    ideal_from_labeling,
    is_coordinatization,
    is_strong_coordinatization,
    is_weak_coordinatization,
    verify_labeling_recovery,
    weak_ideal,
)

from conftest import (
    chain_condition_labeling,
    lattices_with,
    overlap_condition_labeling,
    random_labeling,
    random_lattice,
)

BOOLEAN3 = AtomicLattice.from_sets(3, [[], [1], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]])

FIG2 = AtomicLattice.from_sets(3, [[], [1], [2], [3], [2, 3], [1, 2, 3]])
FIG2_LABELS = Labeling.from_sets(FIG2, [([1], "a*b^2"), ([2], "e"), ([3], "a*c")])

FIG3 = AtomicLattice.from_sets(
    5, [[], [1], [2], [3], [4], [5], [1, 2], [2, 3], [4, 5], [1, 2, 3, 4, 5]]
)
FIG3_LABELS = Labeling.from_sets(
    FIG3,
    [
        ([1], "a"),
        ([2], "b"),
        ([3], "c"),
        ([4], "d"),
        ([5], "e"),
        ([1, 2], "a*b"),
        ([2, 3], "b*c"),
        ([4, 5], "d*e"),
    ],
)

FIG6_LABELS = Labeling.from_sets(
    BOOLEAN3,
    [
        ([1], "a"),
        ([2], "e"),
        ([3], "m"),
        ([1, 2], "a*c"),
        ([1, 3], "c*m"),
        ([2, 3], "e"),
    ],
)


# -- the worked examples, frozen ------------------------------------------------


def test_coordinatization_without_strength():
    """An abstract isomorphism can exist even when the canonical atom map
    collides; the generated lattice is isomorphic only by permuting atoms."""
    c = classify(FIG2, FIG2_LABELS)
    assert c.is_coordinatization and not c.is_strong
    assert "is_strong" in c.witness


def test_weakness_without_coordinatization():
    c = classify(FIG3, FIG3_LABELS)
    assert c.is_weak and not c.is_coordinatization
    # plain and refined generators genuinely differ here
    assert tuple(ideal_from_labeling(FIG3, FIG3_LABELS)) != tuple(weak_ideal(FIG3, FIG3_LABELS))


def test_overlap_without_chains():
    c = classify(BOOLEAN3, FIG6_LABELS)
    assert c.satisfies_C1C2 and not c.satisfies_A1A2 and c.is_weak


# -- the sufficient-condition checks --------------------------------------------


def test_chain_conditions_unlabeled_meet_irreducible():
    lab = Labeling.from_sets(BOOLEAN3, [([1, 2], "x"), ([1, 3], "y")])  # {2,3} missing
    ok, witness = check_strong_conditions(BOOLEAN3, lab)
    assert not ok and "{2,3}" in witness


def test_chain_conditions_shared_variable_off_chain():
    lab = Labeling.from_sets(
        BOOLEAN3, [([1, 2], "x"), ([1, 3], "x"), ([2, 3], "y")]
    )
    ok, witness = check_strong_conditions(BOOLEAN3, lab)
    assert not ok and "variable x" in witness


def test_chain_conditions_top_exempt():
    # {2,3} in FIG2 has the single upper cover {1,2,3}: meet-irreducible
    lab = Labeling.from_sets(FIG2, [([1], "x"), ([2], "y"), ([3], "z"), ([2, 3], "w")])
    assert check_strong_conditions(FIG2, lab) == (True, None)
    # same labeling minus the coatom fails
    lab2 = Labeling.from_sets(FIG2, [([1], "x"), ([2], "y"), ([3], "z")])
    assert check_strong_conditions(FIG2, lab2)[0] is False


def test_overlap_conditions_swallowed_label():
    # label of {1,2} is exactly the overlap: first overlap condition fails
    lab = Labeling.from_sets(
        BOOLEAN3, [([1, 2], "x"), ([1, 3], "x*y"), ([2, 3], "z")]
    )
    ok, witness = check_weak_conditions(BOOLEAN3, lab)
    assert not ok and "overlap" in witness


def test_overlap_conditions_entangled_non_chain():
    # c ties {1,2} to both {1,3} and {2,3}, which are incomparable
    lab = Labeling.from_sets(
        BOOLEAN3, [([1, 2], "c*x"), ([1, 3], "c*y"), ([2, 3], "c*z")]
    )
    ok, witness = check_weak_conditions(BOOLEAN3, lab)
    assert not ok and "chain" in witness


# -- implications over random corpora -------------------------------------------


def _corpus(rng, rounds=60):
    for _ in range(rounds):
        lat = random_lattice(rng, rng.randint(2, 4))
        kind = rng.random()
        if kind < 0.35:
            yield lat, chain_condition_labeling(rng, lat)
        elif kind < 0.6:
            yield lat, overlap_condition_labeling(rng, lat)
        else:
            yield lat, random_labeling(rng, lat)


def test_chain_conditions_imply_overlap_conditions(rng):
    # chains per variable leave incomparable labels with unit gcd
    for lat, lab in _corpus(rng):
        if check_strong_conditions(lat, lab)[0]:
            assert check_weak_conditions(lat, lab)[0]


def test_chain_conditions_imply_strong(rng):
    hits = 0
    for lat, lab in _corpus(rng):
        if check_strong_conditions(lat, lab)[0]:
            hits += 1
            assert is_strong_coordinatization(lat, lab)
    assert hits >= 15  # the corpus must actually exercise the implication


def test_overlap_conditions_imply_weak(rng):
    hits = 0
    for lat, lab in _corpus(rng):
        if check_weak_conditions(lat, lab)[0]:
            hits += 1
            assert is_weak_coordinatization(lat, lab)
    assert hits >= 15


def test_strong_iff_weak_with_equal_generators(rng):
    for lat, lab in _corpus(rng, rounds=80):
        c = classify(lat, lab)
        if c.is_weak:
            same = tuple(ideal_from_labeling(lat, lab)) == tuple(weak_ideal(lat, lab))
            assert c.is_strong == same
        else:
            assert not c.is_strong


def test_strong_implies_coordinatization(rng):
    for lat, lab in _corpus(rng):
        c = classify(lat, lab)
        if c.is_strong:
            assert c.is_coordinatization


def test_classification_invariant_under_variable_renaming(rng):
    for _ in range(20):
        lat = random_lattice(rng, rng.randint(2, 4))
        lab = random_labeling(rng, lat)
        renamed = lab.map_monomials(
            lambda m: type(m)({f"r_{v}": e for v, e in m.items()})
        )
        assert classify(lat, lab).to_json_dict() | {"witness": None} == classify(
            lat, renamed
        ).to_json_dict() | {"witness": None}


# -- labeling recovery -----------------------------------------------------------


def test_recovery_requires_chain_conditions():
    with pytest.raises(PreconditionError):
        verify_labeling_recovery(BOOLEAN3, FIG6_LABELS)


def test_recovery_roundtrip(rng):
    for _ in range(40):
        lat = random_lattice(rng, rng.randint(2, 4))
        lab = chain_condition_labeling(rng, lat)
        assert verify_labeling_recovery(lat, lab)


# -- degenerate labelings ---------------------------------------------------------


def test_empty_labeling_classifies_false_not_raises():
    lab = Labeling(BOOLEAN3, {})
    c = classify(BOOLEAN3, lab)
    assert not c.satisfies_A1A2 and not c.satisfies_C1C2
    assert not c.is_coordinatization and not c.is_strong and not c.is_weak
    assert "is_weak" in c.witness and "unit" in c.witness["is_weak"]


def test_degenerate_predicates_raise_when_called_directly():
    from lcmlattice import DegenerateIdealError

    lab = Labeling(BOOLEAN3, {})
    with pytest.raises(DegenerateIdealError):
        is_coordinatization(BOOLEAN3, lab)
    with pytest.raises(DegenerateIdealError):
        is_strong_coordinatization(BOOLEAN3, lab)
    with pytest.raises(DegenerateIdealError):
        is_weak_coordinatization(BOOLEAN3, lab)


# -- report shape ------------------------------------------------------------------


def test_classification_json_fields():
    doc = classify(FIG2, FIG2_LABELS).to_json_dict()
    assert list(doc) == [
        "satisfies_A1A2",
        "satisfies_C1C2",
        "is_coordinatization",
        "is_strong",
        "is_weak",
        "witness",
    ]
    clean = classify(BOOLEAN3, FIG6_LABELS.map_monomials(lambda m: m))
    assert set(clean.witness) <= {"satisfies_A1A2", "satisfies_C1C2"}


def test_witness_only_for_false_fields(rng):
    for lat, lab in _corpus(rng, rounds=30):
        c = classify(lat, lab)
        doc = c.to_json_dict()
        for field, reason in (c.witness or {}).items():
            assert doc[field] is False and isinstance(reason, str)
