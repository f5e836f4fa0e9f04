"""Shared corpus builders and slow independent oracles.

Random generators here are deterministic per-test (seeded ``random.Random``)
so failures reproduce.  The labeling builders come in three flavours:

* :func:`random_labeling` — arbitrary labels, no structural guarantee;
* :func:`chain_condition_labeling` — guaranteed to satisfy the chain
  conditions (all non-top meet-irreducibles labeled, per-variable chains);
* :func:`overlap_condition_labeling` — guaranteed to satisfy the overlap
  conditions while usually *violating* the chain conditions.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations

import pytest

from lcmlattice import AtomicLattice, Labeling, Monomial, enumerate_all_lattices


@lru_cache(maxsize=None)
def lattices_with(n: int) -> tuple[AtomicLattice, ...]:
    """Every atomic lattice on n atoms (n <= 4), cached across tests."""
    return tuple(enumerate_all_lattices(n, allow_large=(n == 4)))


def brute_force_isomorphic(p: AtomicLattice, q: AtomicLattice) -> bool:
    """Try every atom bijection.  Slow but independent of the search in
    :func:`lcmlattice.lattice_isomorphic`; only sensible for small n."""
    if p.n != q.n or len(p) != len(q):
        return False
    targets = set(q.sets)
    for perm in permutations(range(p.n)):
        image = set()
        for mask in p.sets:
            out = 0
            rest = mask
            while rest:
                low = rest & -rest
                out |= 1 << perm[low.bit_length() - 1]
                rest ^= low
            image.add(out)
        if image == targets:
            return True
    return False


def random_lattice(rng: random.Random, n: int, extra: int | None = None) -> AtomicLattice:
    """A random atomic lattice: required sets, a few random subsets, then
    intersection closure."""
    full = (1 << n) - 1
    sets = {0, full} | {1 << i for i in range(n)}
    if extra is None:
        extra = rng.randint(0, max(1, 2 ** n // 3))
    for _ in range(extra):
        sets.add(rng.randint(1, full))
    changed = True
    while changed:
        changed = False
        for a in list(sets):
            for b in list(sets):
                if (a & b) not in sets:
                    sets.add(a & b)
                    changed = True
    return AtomicLattice(n, sets)


def random_monomial(rng: random.Random, variables: list[str], max_exp: int = 3) -> Monomial:
    chosen = rng.sample(variables, k=rng.randint(1, min(3, len(variables))))
    return Monomial({v: rng.randint(1, max_exp) for v in chosen})


def random_labeling(rng: random.Random, lat: AtomicLattice, variables=None) -> Labeling:
    """Arbitrary labels on a random subset of non-top, non-bottom elements."""
    if variables is None:
        variables = ["x", "y", "z", "w"]
    candidates = [p for p in lat.sets if p not in (0, lat.top)]
    k = rng.randint(0, len(candidates))
    table = {p: random_monomial(rng, variables) for p in rng.sample(candidates, k=k)}
    return Labeling(lat, table)


def chain_condition_labeling(rng: random.Random, lat: AtomicLattice) -> Labeling:
    """Label every non-top meet-irreducible (and sometimes more) so that each
    variable's support is a chain; mostly via fresh per-element variables,
    with an occasional shared variable threaded along a chain."""
    table: dict[int, Monomial] = {}
    fresh = 0
    for p in lat.meet_irreducibles():
        if p == lat.top:
            continue
        fresh += 1
        table[p] = Monomial({f"v{fresh}": rng.randint(1, 3)})
    others = [p for p in lat.sets if p not in table and p != lat.top and p != 0]
    for p in rng.sample(others, k=rng.randint(0, min(2, len(others)))):
        fresh += 1
        table[p] = Monomial({f"v{fresh}": rng.randint(1, 3)})
    if table and rng.random() < 0.7:
        order = list(table)
        rng.shuffle(order)
        chain: list[int] = []
        for p in order:
            if all(lat.leq(p, q) or lat.leq(q, p) for q in chain):
                chain.append(p)
        if len(chain) >= 2:
            for p in chain:
                table[p] = table[p] * Monomial({"w": rng.randint(1, 2)})
    return Labeling(lat, table)


def overlap_condition_labeling(rng: random.Random, lat: AtomicLattice) -> Labeling:
    """Label every non-top meet-irreducible with a fresh variable, then make
    one incomparable pair share an extra common variable.  The shared variable
    breaks the chain conditions but keeps both tangle sets to a single
    element, so the overlap conditions still hold."""
    table: dict[int, Monomial] = {}
    fresh = 0
    mi = [p for p in lat.meet_irreducibles() if p != lat.top]
    for p in mi:
        fresh += 1
        table[p] = Monomial({f"v{fresh}": rng.randint(1, 3)})
    incomparable = [
        (p, q)
        for i, p in enumerate(mi)
        for q in mi[i + 1 :]
        if not lat.leq(p, q) and not lat.leq(q, p)
    ]
    if incomparable:
        p, q = rng.choice(incomparable)
        shared = Monomial({"c": rng.randint(1, 2)})
        table[p] = table[p] * shared
        table[q] = table[q] * shared
    return Labeling(lat, table)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
