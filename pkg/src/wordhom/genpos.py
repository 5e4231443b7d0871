"""General position relations, their axioms, and the blocking-order search.

A general position relation is a family of predicates gp(x; y) on pairs of
words over one alphabet, subject to three axioms:

  (i)   invariance under permuting the x block and under permuting the y block;
  (ii)  gp(x.y; z) implies gp(x; y.z), and gp(x; y.z) implies gp(x; z);
  (iii) gp(x; y.z) and gp(y; z) together imply gp(x.y; z).

An empty x block satisfies gp vacuously.  The axioms are testable obligations,
exercised by randomized trials in ``check_axioms``, never assumed.

The order of a relation is the least length of a word that no alphabet
element is in general position to; ``gp_order`` searches for it exactly.
"""

from __future__ import annotations

import itertools
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

from .alphabet import Alphabet, Word
from .errors import InvalidInput


def gp_inj(x, y) -> bool:
    """Injective-word relation: entries of x pairwise distinct and disjoint from y."""
    sx = set(x)
    return len(sx) == len(x) and not sx & set(y)


def _reduce_mod(vec, p):
    return tuple(a % p for a in vec)


def _row_reduce(vectors, p):
    """Row-reduced basis of the span of the given vectors over F_p."""
    basis = []
    pivots = []
    for vec in vectors:
        v = list(vec)
        for b, piv in zip(basis, pivots):
            if v[piv]:
                factor = v[piv]
                v = [(a - factor * c) % p for a, c in zip(v, b)]
        lead = next((i for i, a in enumerate(v) if a), None)
        if lead is None:
            continue
        inv = pow(v[lead], p - 2, p)
        basis.append([(a * inv) % p for a in v])
        pivots.append(lead)
    return basis


def _in_span(vec, basis_vectors, p) -> bool:
    v = list(vec)
    basis = _row_reduce(basis_vectors, p)
    for b in basis:
        lead = next(i for i, a in enumerate(b) if a)
        if v[lead]:
            factor = v[lead]
            v = [(a - factor * c) % p for a, c in zip(v, b)]
    return not any(v)


def gp_vec(x, y, p: int, dim: int | None = None) -> bool:
    """Vector relation over F_p.

    True iff there is no linear relation with at most dim nonzero
    coefficients, over the entries of x followed by those of y, in which some
    x coefficient is nonzero.  Equivalently: no entry of x lies in the span
    of at most dim-1 of the remaining entries (the empty span forces the
    entry itself to be nonzero).
    """
    entries = [tuple(v) for v in x] + [tuple(v) for v in y]
    if dim is None:
        if not entries:
            return True
        dim = len(entries[0])
    if any(len(v) != dim for v in entries):
        raise InvalidInput("vector entries have mismatched dimensions", dim=dim)
    entries = [_reduce_mod(v, p) for v in entries]
    zero = (0,) * dim
    nx = len(x)
    for i in range(nx):
        v = entries[i]
        if v == zero:
            return False
        others = entries[:i] + entries[i + 1 :]
        for size in range(1, dim):
            if size > len(others):
                break
            for subset in itertools.combinations(others, size):
                if _in_span(v, subset, p):
                    return False
    return True


class GeneralPositionRelation(ABC):
    """Abstract predicate family together with its ground alphabet."""

    alphabet: Alphabet
    name: str = "abstract"
    # When True, whether a word blocks every further element depends only on
    # the set of its entries (up to the relation's own symmetries), so the
    # order search may enumerate canonical sets instead of all sequences.
    set_blocking: bool = False

    @abstractmethod
    def gp(self, x, y) -> bool:
        """Is the word x in general position to the word y?"""

    @abstractmethod
    def extension_candidates(self) -> list:
        """Finite universe of elements relevant to extending or blocking words."""

    def is_blocking(self, word) -> bool:
        """True when no candidate element is in general position to the word."""
        return not any(self.gp((e,), tuple(word)) for e in self.extension_candidates())

    def describe(self) -> dict:
        return {"name": self.name, "alphabet": self.alphabet.to_json()}


class InjectiveRelation(GeneralPositionRelation):
    """x in general position to y iff x is injective and disjoint from y."""

    set_blocking = True

    def __init__(self, m: int):
        self.alphabet = Alphabet.letters(m)
        self.name = "inj"

    def gp(self, x, y) -> bool:
        return gp_inj(x, y)

    def extension_candidates(self) -> list:
        return self.alphabet.symbols()


class VectorRelation(GeneralPositionRelation):
    """Vectors over F_p in general position, with span results cached.

    The relation only depends on entries up to nonzero scaling, so candidate
    enumeration works over canonical projective representatives (first
    nonzero coordinate scaled to 1).
    """

    set_blocking = True

    def __init__(self, p: int, dim: int):
        self.alphabet = Alphabet.vectors(p, dim)
        self.p = p
        self.dim = dim
        self.name = "vec"
        self._span_cache: dict[frozenset, frozenset] = {}

    def gp(self, x, y) -> bool:
        for v in itertools.chain(x, y):
            self.alphabet.check_symbol(tuple(v))
        return gp_vec(x, y, self.p, self.dim)

    def projective_point(self, v) -> Word:
        lead = next((a for a in v if a), None)
        if lead is None:
            raise InvalidInput("the zero vector has no projective point")
        inv = pow(lead, self.p - 2, self.p)
        return tuple((a * inv) % self.p for a in v)

    def projective_points(self) -> list:
        seen = set()
        out = []
        for v in self.alphabet.symbols():
            if any(v):
                pt = self.projective_point(v)
                if pt not in seen:
                    seen.add(pt)
                    out.append(pt)
        return sorted(out)

    def extension_candidates(self) -> list:
        return self.projective_points()

    def _span_points(self, reps: frozenset) -> frozenset:
        """Projective points of the span of the given representatives."""
        cached = self._span_cache.get(reps)
        if cached is not None:
            return cached
        basis = _row_reduce(sorted(reps), self.p)
        points = set()
        for combo in itertools.product(range(self.p), repeat=len(basis)):
            if not any(combo):
                continue
            vec = [0] * self.dim
            for coeff, b in zip(combo, basis):
                if coeff:
                    for i, a in enumerate(b):
                        vec[i] = (vec[i] + coeff * a) % self.p
            if any(vec):
                points.add(self.projective_point(tuple(vec)))
        result = frozenset(points)
        self._span_cache[reps] = result
        return result

    def is_blocking(self, word) -> bool:
        entries = [tuple(v) for v in word if any(v)]
        reps = sorted({self.projective_point(v) for v in entries})
        covered = set()
        for size in range(1, self.dim):
            if size > len(reps):
                break
            for subset in itertools.combinations(reps, size):
                covered |= self._span_points(frozenset(subset))
        return covered >= set(self.projective_points())


# -- axiom checking ----------------------------------------------------------

@dataclass
class AxiomViolation:
    axiom: str
    x: Word
    y: Word
    z: Word

    def to_json(self, alphabet: Alphabet) -> dict:
        return {
            "axiom": self.axiom,
            "x": alphabet.word_to_json(self.x),
            "y": alphabet.word_to_json(self.y),
            "z": alphabet.word_to_json(self.z),
        }


@dataclass
class AxiomReport:
    relation: str
    trials: int
    seed: int
    passed: bool
    hypothesis_hits: dict[str, int] = field(default_factory=dict)
    violations: list[AxiomViolation] = field(default_factory=list)

    def to_json(self, alphabet: Alphabet) -> dict:
        return {
            "relation": self.relation,
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed,
            "hypothesis_hits": dict(sorted(self.hypothesis_hits.items())),
            "violations": [v.to_json(alphabet) for v in self.violations],
        }


def biased_triple_sampler(relation: GeneralPositionRelation):
    """Default sampler for check_axioms.

    Word lengths are drawn uniformly from 0..3.  Half the draws build the
    combined word by greedy extension with elements already in general
    position, because uniformly random vector words are almost always
    degenerate and would never exercise the composition axiom's hypothesis.
    """
    symbols = relation.alphabet.symbols()
    candidates = relation.extension_candidates()

    def sample(rng: random.Random):
        lengths = [rng.randint(0, 3) for _ in range(3)]
        total = sum(lengths)
        if rng.random() < 0.5:
            word: list = []
            for _ in range(total):
                pool = [e for e in candidates if relation.gp((e,), tuple(word))]
                word.append(rng.choice(pool) if pool else rng.choice(symbols))
        else:
            word = [rng.choice(symbols) for _ in range(total)]
        x = tuple(word[: lengths[0]])
        y = tuple(word[lengths[0] : lengths[0] + lengths[1]])
        z = tuple(word[lengths[0] + lengths[1] :])
        return x, y, z

    return sample


def check_axioms(
    relation: GeneralPositionRelation,
    sampler=None,
    trials: int = 1000,
    seed: int = 0,
    max_recorded: int = 5,
) -> AxiomReport:
    """Randomized trial of the three axioms; failures become report entries."""
    if trials < 1:
        raise InvalidInput("need at least one trial", trials=trials)
    if sampler is None:
        sampler = biased_triple_sampler(relation)
    rng = random.Random(seed)
    hits = {"symmetry": 0, "weaken-left": 0, "weaken-right": 0, "composition": 0}
    violations: list[AxiomViolation] = []

    def record(axiom, x, y, z):
        if len(violations) < max_recorded:
            violations.append(AxiomViolation(axiom, x, y, z))

    for _ in range(trials):
        x, y, z = sampler(rng)
        yz = y + z

        base = relation.gp(x, yz)
        sx = tuple(rng.sample(x, len(x)))
        syz = tuple(rng.sample(yz, len(yz)))
        hits["symmetry"] += 1
        if relation.gp(sx, yz) != base or relation.gp(x, syz) != base:
            record("symmetry", x, y, z)

        if relation.gp(x + y, z):
            hits["weaken-left"] += 1
            if not relation.gp(x, yz):
                record("weaken-left", x, y, z)

        if base:
            hits["weaken-right"] += 1
            if not relation.gp(x, z):
                record("weaken-right", x, y, z)

        if base and relation.gp(y, z):
            hits["composition"] += 1
            if not relation.gp(x + y, z):
                record("composition", x, y, z)

    return AxiomReport(
        relation=relation.name,
        trials=trials,
        seed=seed,
        passed=not violations,
        hypothesis_hits=hits,
        violations=violations,
    )


# -- the order invariant -----------------------------------------------------

@dataclass(frozen=True)
class GpOrderResult:
    """Either the exact order with a blocking witness, or a lower bound."""

    exact: bool
    value: int
    witness: tuple | None = None

    @property
    def order(self) -> int | None:
        return self.value if self.exact else None

    @property
    def lower_bound(self) -> int:
        return self.value

    def to_json(self, alphabet: Alphabet) -> dict:
        return {
            "order": self.value if self.exact else None,
            "lower_bound": self.value,
            "witness": alphabet.word_to_json(self.witness) if self.witness is not None else None,
        }


def gp_order(
    relation: GeneralPositionRelation,
    universe=None,
    max_n: int | None = None,
    set_blocking: bool | None = None,
) -> GpOrderResult:
    """Smallest length of a word no candidate element is in general position to.

    Searches lengths 0, 1, ... in order, so an exact answer always comes with
    a shortest witness (the lexicographically least one).  When no blocking
    word of length up to max_n exists the result is the lower bound
    max_n + 1.  Set-blocking relations are searched over canonical sets;
    otherwise all sequences with repeats are enumerated.
    """
    if universe is None:
        universe = relation.extension_candidates()
    universe = sorted(set(universe))
    if not universe:
        raise InvalidInput("the search universe is empty")
    if set_blocking is None:
        set_blocking = relation.set_blocking
    if max_n is None:
        if not set_blocking:
            raise InvalidInput("a sequence search over an abstract relation needs max_n")
        max_n = len(universe)

    for n in range(max_n + 1):
        if set_blocking:
            candidates = itertools.combinations(universe, n)
        else:
            candidates = itertools.product(universe, repeat=n)
        for word in candidates:
            if relation.is_blocking(word):
                return GpOrderResult(exact=True, value=n, witness=tuple(word))
    return GpOrderResult(exact=False, value=max_n + 1, witness=None)
