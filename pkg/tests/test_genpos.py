import random

import pytest

from wordhom import (
    Alphabet,
    GeneralPositionRelation,
    InjectiveRelation,
    InvalidInput,
    VectorRelation,
    check_axioms,
    gp_inj,
    gp_order,
    gp_vec,
)


class SetDisjointOnly(GeneralPositionRelation):
    """Deliberately broken: the pairwise-distinct clause is dropped."""

    set_blocking = True

    def __init__(self, m):
        self.alphabet = Alphabet.letters(m)
        self.name = "broken"

    def gp(self, x, y):
        return not set(x) & set(y)

    def extension_candidates(self):
        return self.alphabet.symbols()


def test_gp_inj_examples():
    assert gp_inj((1, 2), (3, 4))
    assert not gp_inj((1, 1), ())
    assert not gp_inj((2,), (5, 2))


def test_gp_vec_examples():
    assert gp_vec([(1, 0)], [(0, 1)], p=2)
    assert not gp_vec([(0, 0)], [], p=2)
    assert not gp_vec([(1, 0)], [(2, 0)], p=3)


def test_gp_vec_rejects_mixed_dimensions():
    with pytest.raises(InvalidInput):
        gp_vec([(1, 0)], [(1, 0, 0)], p=2)


def test_gp_vec_empty_x_is_vacuous():
    assert gp_vec([], [(0, 0)], p=3, dim=2)


def test_gp_vec_projective_invariance():
    rng = random.Random(4)
    R = VectorRelation(5, 2)
    symbols = [s for s in R.alphabet.symbols() if any(s)]
    for _ in range(200):
        x = tuple(rng.choice(symbols) for _ in range(rng.randint(1, 3)))
        y = tuple(rng.choice(symbols) for _ in range(rng.randint(0, 2)))
        base = R.gp(x, y)
        lam = rng.randint(1, 4)
        i = rng.randrange(len(x))
        scaled = x[:i] + (tuple((lam * a) % 5 for a in x[i]),) + x[i + 1 :]
        assert R.gp(scaled, y) == base
        if y:
            j = rng.randrange(len(y))
            scaled_y = y[:j] + (tuple((lam * a) % 5 for a in y[j]),) + y[j + 1 :]
            assert R.gp(x, scaled_y) == base


def test_dropping_tail_of_y_preserves_gp():
    rng = random.Random(17)
    R = VectorRelation(3, 2)
    symbols = [s for s in R.alphabet.symbols() if any(s)]
    hits = 0
    for _ in range(300):
        x = tuple(rng.choice(symbols) for _ in range(rng.randint(1, 2)))
        y = tuple(rng.choice(symbols) for _ in range(rng.randint(1, 3)))
        if R.gp(x, y):
            hits += 1
            for cut in range(len(y)):
                assert R.gp(x, y[:cut])
    assert hits > 0


@pytest.mark.parametrize(
    "relation,seed",
    [
        (InjectiveRelation(6), 2024),
        (VectorRelation(3, 2), 2024),
        (VectorRelation(2, 3), 2024),
    ],
)
def test_axiom_suite_passes_on_shipped_relations(relation, seed):
    report = check_axioms(relation, trials=1000, seed=seed)
    assert report.passed, [v.axiom for v in report.violations]
    # The biased sampler must actually exercise each hypothesis.
    assert all(hits > 0 for hits in report.hypothesis_hits.values())


def test_axiom_suite_catches_broken_relation():
    report = check_axioms(SetDisjointOnly(6), trials=1000, seed=3)
    assert not report.passed
    assert report.violations
    v = report.violations[0]
    assert v.axiom in ("weaken-left", "weaken-right", "composition", "symmetry")


def test_gp_order_injective_equals_alphabet_size():
    for m in range(3, 8):
        result = gp_order(InjectiveRelation(m))
        assert result.exact and result.value == m
        assert result.witness is not None and len(result.witness) == m


@pytest.mark.parametrize(
    "p,dim,expected",
    [(2, 2, 3), (3, 2, 4), (5, 2, 6), (2, 3, 4), (3, 3, 4), (2, 4, 5)],
)
def test_gp_order_vector_table(p, dim, expected):
    result = gp_order(VectorRelation(p, dim))
    assert result.exact and result.value == expected
    assert result.witness is not None and len(result.witness) == expected
    assert VectorRelation(p, dim).is_blocking(result.witness)


def test_gp_order_witness_is_minimal():
    R = VectorRelation(3, 2)
    result = gp_order(R)
    # no shorter blocking configuration exists
    import itertools

    points = R.projective_points()
    for n in range(result.value):
        for sub in itertools.combinations(points, n):
            assert not R.is_blocking(sub)


def test_basis_plus_diagonal_blocks_when_field_is_small():
    # With p <= dim, the standard basis together with the all-ones sum admits
    # no further element in general position.
    for p, dim in [(2, 3), (3, 3), (2, 4)]:
        R = VectorRelation(p, dim)
        basis = [tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim)]
        word = tuple(basis) + ((1,) * dim,)
        assert R.is_blocking(word)


def test_gp_order_independent_of_universe_order():
    rng = random.Random(6)
    R = VectorRelation(3, 2)
    universe = R.projective_points()
    baseline = gp_order(R, universe=universe)
    for _ in range(5):
        shuffled = universe[:]
        rng.shuffle(shuffled)
        result = gp_order(R, universe=shuffled)
        assert result == baseline


def test_gp_order_empty_universe_rejected():
    with pytest.raises(InvalidInput):
        gp_order(InjectiveRelation(3), universe=[])


def test_gp_order_abstract_relation_needs_bound():
    with pytest.raises(InvalidInput):
        gp_order(SetDisjointOnly(3), set_blocking=False)


def test_gp_order_sequence_search_matches_set_search():
    # The broken relation still blocks exactly when the set covers everything.
    result = gp_order(SetDisjointOnly(3), max_n=4, set_blocking=False)
    assert result.exact and result.value == 3


def test_gp_order_lower_bound_when_no_blocker():
    # dim 1: any nonzero scalar is in general position to everything.
    result = gp_order(VectorRelation(3, 1))
    assert not result.exact
    assert result.value == len(VectorRelation(3, 1).projective_points()) + 1
    assert result.order is None


def test_default_sampler_biases_toward_general_position():
    R = VectorRelation(2, 3)
    report = check_axioms(R, trials=400, seed=0)
    assert report.hypothesis_hits["composition"] >= 40
