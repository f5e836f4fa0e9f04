"""Super-atomic lattices: detection, construction, and the cover order.

A finite atomic lattice is *super-atomic* when for every element p that is
neither the bottom nor an atom, every atom subset joining to p contains
exactly one pair whose join is already p.  Two independent detectors are
provided: the literal definition (:func:`is_super_atomic`) and the support
characterization (:func:`is_super_atomic_via_supp`); they are kept separate
on purpose so each can serve as an oracle for the other.

Construction works level by level, top down: each set S of the current level
picks a pair delta(S) of its members not jointly contained in any other set
of the level, and contributes the two sets S minus one chosen member to the
next level.  Exhausting all valid choices enumerates every super-atomic
lattice on n atoms exactly once.

Lattices on the same n atoms are partially ordered by containment of their
set systems; covers in that order add exactly one set, and the added set is
always meet-irreducible in the larger lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterator, Optional

from .errors import CapExceededError, PreconditionError
from .lattice import AtomicLattice, atoms_of, bits_of

__all__ = [
    "is_super_atomic",
    "is_super_atomic_via_supp",
    "iter_super_atomic_families",
    "enumerate_super_atomic",
    "super_atomic_size",
    "enumerate_all_lattices",
    "CoverWitness",
    "cover_witness",
    "verify_new_element_meet_irreducible",
    "check_superatomic_structure",
]

MAX_ENUM_ATOMS = 7


def _pairs_within(mask: int) -> list[int]:
    bits = list(bits_of(mask))
    return [a | b for a, b in combinations(bits, 2)]


def is_super_atomic(lat: AtomicLattice) -> bool:
    """The literal definition: every joining set has exactly one joining pair."""
    for p in lat.sets:
        if p == 0 or p.bit_count() == 1:
            continue
        for T in lat.joining_sets(p):
            pairs = 0
            for pr in _pairs_within(T):
                if lat.join_mask(pr) == p:
                    pairs += 1
                    if pairs > 1:
                        break
            if pairs != 1:
                return False
    return True


def is_super_atomic_via_supp(lat: AtomicLattice) -> bool:
    """The support characterization: some pair joins to p with both
    supp(p)-minus-one-member sets present in the family."""
    for p in lat.sets:
        if p == 0 or p.bit_count() == 1:
            continue
        if not any(
            lat.join_mask(pr) == p and (p ^ (pr & -pr)) in lat and (p ^ (pr ^ (pr & -pr))) in lat
            for pr in _pairs_within(p)
        ):
            return False
    return True


def super_atomic_size(n: int) -> int:
    """Element count shared by every super-atomic lattice on n atoms."""
    if n < 2:
        raise PreconditionError(f"need at least 2 atoms, got {n}")
    return comb(n, 2) + n + 1


def iter_super_atomic_families(n: int, cap: int = MAX_ENUM_ATOMS) -> Iterator[frozenset[int]]:
    """Yield the set system of every super-atomic lattice on n atoms.

    Streams raw mask families without validating or ordering them, which is
    what makes counting at n = 7 (about 2.6 million families) tolerable.
    Each family is produced exactly once: within a level, choice combinations
    yielding the same child level are merged, and families from distinct
    levels can never coincide because a family determines its levels (the
    sets of each cardinality).
    """
    if n < 2:
        raise PreconditionError(f"need at least 2 atoms, got {n}")
    if n > cap:
        raise CapExceededError(f"enumeration on {n} atoms exceeds the cap of {cap}")
    top = (1 << n) - 1
    base = frozenset((0, *(1 << i for i in range(n)), top))
    yield from _descend((top,), base)


def _descend(level: tuple[int, ...], family: frozenset[int]) -> Iterator[frozenset[int]]:
    if level[0].bit_count() == 2:
        yield family
        return
    options = []
    for S in level:
        opts = [pr for pr in _pairs_within(S) if all(pr & ~T for T in level if T != S)]
        if not opts:
            return
        options.append(opts)
    seen = set()
    for choice in product(*options):
        child = set()
        for S, pr in zip(level, choice):
            lo = pr & -pr
            child.add(S ^ lo)
            child.add(S ^ (pr ^ lo))
        frozen = frozenset(child)
        if frozen in seen:
            continue
        seen.add(frozen)
        yield from _descend(tuple(sorted(frozen)), family | frozen)


def _family_key(family: frozenset[int]) -> tuple:
    return tuple(sorted((m.bit_count(), m) for m in family))


def enumerate_super_atomic(n: int, cap: int = MAX_ENUM_ATOMS) -> list[AtomicLattice]:
    """All super-atomic lattices on n atoms, validated and canonically ordered.

    Materializes everything; for n = 7 prefer :func:`iter_super_atomic_families`
    (the full list runs to millions of lattices).
    """
    families = set(iter_super_atomic_families(n, cap=cap))
    return [AtomicLattice(n, fam) for fam in sorted(families, key=_family_key)]


def enumerate_all_lattices(n: int, allow_large: bool = False) -> list[AtomicLattice]:
    """Every finite atomic lattice on n atoms, canonically ordered.

    Ground-truth enumeration by brute force over subsets of the non-required
    sets, keeping the intersection-closed ones.  Doubly exponential: n <= 3
    is free, n = 4 (545 lattices, from 1024 candidate subsets) must be
    requested with ``allow_large=True``, larger n is refused outright.
    """
    if n < 1:
        raise PreconditionError(f"need at least 1 atom, got {n}")
    if n > 4:
        raise CapExceededError(f"enumerating all lattices on {n} atoms is not tractable here (max 4)")
    if n == 4 and not allow_large:
        raise CapExceededError("enumerating all lattices on 4 atoms is slow; pass allow_large=True")
    top = (1 << n) - 1
    required = (0, *(1 << i for i in range(n)), top)
    optional = [m for m in range(1, top) if m.bit_count() >= 2]
    out = []
    for bits in range(1 << len(optional)):
        chosen = [m for i, m in enumerate(optional) if bits >> i & 1]
        members = set(required).union(chosen)
        if all(a & b in members for a, b in combinations(chosen, 2)):
            out.append(frozenset(members))
    return [AtomicLattice(n, fam) for fam in sorted(out, key=_family_key)]


@dataclass(frozen=True)
class CoverWitness:
    """Evidence that ``larger`` covers ``smaller`` in the containment order:
    the set systems differ by exactly ``new_element``."""

    larger: AtomicLattice
    smaller: AtomicLattice
    new_element: int

    def __post_init__(self):
        if self.larger.n != self.smaller.n:
            raise PreconditionError("cover requires lattices on the same atoms")
        sp, sq = set(self.larger.sets), set(self.smaller.sets)
        if not (sq < sp and len(sp) == len(sq) + 1):
            raise PreconditionError("not a cover: the larger family must add exactly one set")
        if sp - sq != {self.new_element}:
            raise PreconditionError(f"new_element {atoms_of(self.new_element)} is not the added set")


def cover_witness(P: AtomicLattice, Q: AtomicLattice) -> Optional[CoverWitness]:
    """Witness that P covers Q (P's family adds exactly one set), or None."""
    if P.n != Q.n:
        raise PreconditionError("cover comparison requires lattices on the same atoms")
    sp, sq = set(P.sets), set(Q.sets)
    if sq < sp and len(sp) == len(sq) + 1:
        (extra,) = sp - sq
        return CoverWitness(P, Q, extra)
    return None


def verify_new_element_meet_irreducible(witness: CoverWitness) -> bool:
    """The added set of a cover is always meet-irreducible in the larger
    lattice; this evaluates that claim on one witness."""
    return witness.new_element in witness.larger.meet_irreducibles()


def check_superatomic_structure(lat: AtomicLattice) -> bool:
    """Structural facts that hold in every super-atomic lattice.

    (1) the required sets are present; (2) every element of size >= 2 has
    exactly two members whose removal stays in the family, and they form the
    pair joining to it; (3) for incomparable elements, neither one contains
    the other's generating pair.  Raises if the lattice is not super-atomic;
    returns the verdict of the three checks.
    """
    if not is_super_atomic(lat):
        raise PreconditionError("lattice is not super-atomic")
    required = (0, *(1 << i for i in range(lat.n)), lat.top)
    if any(r not in lat for r in required):
        return False
    generating_pair = {}
    for S in lat.sets:
        if S.bit_count() < 2:
            continue
        removable = [b for b in bits_of(S) if (S ^ b) in lat]
        if len(removable) != 2:
            return False
        pr = removable[0] | removable[1]
        if lat.join_mask(pr) != S:
            return False
        generating_pair[S] = pr
    for S1, S2 in combinations(generating_pair, 2):
        if S1 & ~S2 and S2 & ~S1:
            if generating_pair[S1] & ~S2 == 0 or generating_pair[S2] & ~S1 == 0:
                return False
    return True
