"""Finite atomic lattices, encoded as intersection-closed families of atom sets.

Every finite atomic lattice on atoms 1..n is determined by the family
``{ supp(p) : p in P }`` of its elements' atom supports.  Such a family
contains the empty set, every singleton and the full set, and is closed under
pairwise intersection; conversely every such family, ordered by inclusion, is
a finite atomic lattice.  This module works directly with that encoding:
an *element* is an ``int`` bitmask over atoms (atom ``i`` is bit ``i-1``),
and a lattice is a validated, canonically ordered tuple of masks.

Canonical order is (cardinality, mask value); it is the order used for
iteration, serialization and DOT export, which keeps all output byte-stable.
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Optional

from .errors import (
    CapExceededError,
    FormatError,
    IncomparableError,
    NotAnElementError,
    ValidationError,
)

__all__ = [
    "AtomicLattice",
    "lattice_isomorphic",
    "mask_of",
    "atoms_of",
    "bits_of",
]

MAX_ATOMS = 64


def mask_of(atoms: Iterable[int], n: Optional[int] = None) -> int:
    """Bitmask for a collection of 1-based atom indices."""
    mask = 0
    for a in atoms:
        if not isinstance(a, int) or isinstance(a, bool) or a < 1:
            raise FormatError(f"atom indices must be integers >= 1, got {a!r}")
        if n is not None and a > n:
            raise FormatError(f"atom index {a} out of range 1..{n}")
        mask |= 1 << (a - 1)
    return mask


def atoms_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based atom indices of a bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def bits_of(mask: int) -> Iterator[int]:
    """Iterate the single-bit masks of ``mask``, lowest first."""
    while mask:
        b = mask & -mask
        yield b
        mask ^= b


def _canon_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def _set_str(mask: int) -> str:
    return "{" + ",".join(str(a) for a in atoms_of(mask)) + "}"


class AtomicLattice:
    """A validated finite atomic lattice over atoms ``1..n``.

    Construct with :meth:`from_sets` (iterables of 1-based indices) or pass
    bitmasks directly.  Construction validates the axioms and raises
    :class:`ValidationError` carrying *all* violations at once.
    """

    __slots__ = ("n", "sets", "_index", "_join_cache", "_covers", "_upper_covers", "_mi")

    def __init__(self, n: int, masks: Iterable[int]):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValidationError(f"atom count must be a positive integer, got {n!r}")
        if n > MAX_ATOMS:
            raise CapExceededError(f"atom count {n} exceeds the supported maximum {MAX_ATOMS}")
        top = (1 << n) - 1
        seen = set()
        for m in masks:
            if not isinstance(m, int) or isinstance(m, bool) or m < 0 or m > top:
                raise ValidationError(f"element {m!r} is not a bitmask over {n} atoms")
            seen.add(m)

        missing = [m for m in (0, *(1 << i for i in range(n)), top) if m not in seen]
        ordered = sorted(seen, key=_canon_key)
        non_closed = [
            (a, b)
            for a, b in combinations(ordered, 2)
            if a & b not in seen
        ]
        if missing or non_closed:
            parts = []
            if missing:
                parts.append(
                    "missing required sets: " + ", ".join(_set_str(m) for m in sorted(set(missing), key=_canon_key))
                )
            if non_closed:
                shown = ", ".join(f"{_set_str(a)} & {_set_str(b)}" for a, b in non_closed[:5])
                more = "" if len(non_closed) <= 5 else f" (+{len(non_closed) - 5} more)"
                parts.append("intersections not in family: " + shown + more)
            raise ValidationError(
                "; ".join(parts),
                missing_required=[atoms_of(m) for m in sorted(set(missing), key=_canon_key)],
                non_closed_pairs=[(atoms_of(a), atoms_of(b)) for a, b in non_closed],
            )

        self.n = n
        self.sets = tuple(ordered)
        self._index = {m: i for i, m in enumerate(self.sets)}
        self._join_cache: dict[int, int] = {}
        self._covers = None
        self._upper_covers = None
        self._mi = None

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "AtomicLattice":
        return cls(n, (mask_of(s, n) for s in sets))

    # -- basic structure -------------------------------------------------

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.sets[-1]

    @property
    def atoms(self) -> tuple[int, ...]:
        return tuple(1 << i for i in range(self.n))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sets)

    def __contains__(self, mask: int) -> bool:
        return mask in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, AtomicLattice) and self.n == other.n and self.sets == other.sets

    def __hash__(self) -> int:
        return hash((self.n, self.sets))

    def __repr__(self) -> str:
        return f"AtomicLattice(n={self.n}, elements={len(self.sets)})"

    def _require(self, p: int) -> int:
        if p not in self._index:
            raise NotAnElementError(f"{_set_str(p) if isinstance(p, int) else p!r} is not an element of this lattice")
        return p

    # -- order and lattice operations ------------------------------------

    def leq(self, p: int, q: int) -> bool:
        self._require(p)
        self._require(q)
        return p & ~q == 0

    def meet(self, p: int, q: int) -> int:
        """Greatest lower bound; equals the set intersection by closure."""
        self._require(p)
        self._require(q)
        return p & q

    def join(self, p: int, q: int) -> int:
        self._require(p)
        self._require(q)
        return self.join_mask(p | q)

    def join_mask(self, mask: int) -> int:
        """Least element containing ``mask`` (``mask`` need not be an element)."""
        j = self._join_cache.get(mask)
        if j is None:
            if mask & ~self.top:
                raise NotAnElementError(f"{_set_str(mask)} is not within the atom universe")
            for s in self.sets:
                if mask & ~s == 0:
                    j = s
                    break
            self._join_cache[mask] = j
        return j

    def join_atoms(self, masks: Iterable[int]) -> int:
        acc = 0
        for m in masks:
            acc |= m
        return self.join_mask(acc)

    def filter(self, p: int) -> tuple[int, ...]:
        """All elements above (and including) ``p``, canonically ordered."""
        self._require(p)
        return tuple(q for q in self.sets if p & ~q == 0)

    def order_ideal(self, p: int) -> tuple[int, ...]:
        """All elements below (and including) ``p``, canonically ordered."""
        self._require(p)
        return tuple(q for q in self.sets if q & ~p == 0)

    def filter_complement(self, p: int) -> tuple[int, ...]:
        """All elements *not* above ``p``; the index set of Eq.-style label products."""
        self._require(p)
        return tuple(q for q in self.sets if p & ~q != 0)

    def atoms_below(self, p: int) -> tuple[int, ...]:
        self._require(p)
        return tuple(bits_of(p))

    # -- covers and meet-irreducibility -----------------------------------

    def covers(self) -> tuple[tuple[int, int], ...]:
        """All cover pairs ``(p, q)`` with ``p`` covered by ``q``, canonically ordered."""
        if self._covers is None:
            out = []
            for i, q in enumerate(self.sets):
                below = [p for p in self.sets[:i] if p & ~q == 0 and p != q]
                for p in below:
                    if not any(p & ~r == 0 and r & ~q == 0 and r != p and r != q for r in below):
                        out.append((p, q))
            self._covers = tuple(sorted(out, key=lambda pq: (_canon_key(pq[1]), _canon_key(pq[0]))))
        return self._covers

    def upper_covers(self, p: int) -> tuple[int, ...]:
        if self._upper_covers is None:
            table: dict[int, list[int]] = {m: [] for m in self.sets}
            for lo, hi in self.covers():
                table[lo].append(hi)
            self._upper_covers = {m: tuple(v) for m, v in table.items()}
        self._require(p)
        return self._upper_covers[p]

    def meet_irreducibles(self) -> tuple[int, ...]:
        """Elements that are not the meet of two strictly larger ones.

        Equivalently the elements with exactly one upper cover, together with
        the top element (for which the defining condition is vacuous).
        """
        if self._mi is None:
            self._mi = tuple(
                p for p in self.sets if p == self.top or len(self.upper_covers(p)) == 1
            )
        return self._mi

    # -- atom subsets joining to an element --------------------------------

    def joining_sets(self, p: int) -> tuple[int, ...]:
        """All subsets of ``p``'s atoms whose join is ``p``, as masks.

        The empty subset joins to the bottom, so it appears exactly when
        ``p`` is the bottom element.
        """
        self._require(p)
        if p == 0:
            return (0,)
        out = []
        sub = p
        while sub:
            if self.join_mask(sub) == p:
                out.append(sub)
            sub = (sub - 1) & p
        out.reverse()
        return tuple(out)

    # -- intervals ---------------------------------------------------------

    def interval_count(self, lo: int, hi: int) -> int:
        """Number of elements in the closed interval ``[lo, hi]``."""
        self._require(lo)
        self._require(hi)
        if lo & ~hi:
            raise IncomparableError(f"{_set_str(lo)} is not below {_set_str(hi)}")
        return sum(1 for q in self.sets if lo & ~q == 0 and q & ~hi == 0)

    # -- helpers -------------------------------------------------------------

    @staticmethod
    def is_chain(masks: Iterable[int]) -> bool:
        """True when the given masks are pairwise comparable under inclusion."""
        ordered = sorted(set(masks), key=_canon_key)
        return all(a & ~b == 0 for a, b in zip(ordered, ordered[1:]))

    def relabel(self, image: Mapping[int, int] | Iterable[int]) -> "AtomicLattice":
        """Apply an atom permutation; ``image`` maps each 1-based index to its new index."""
        if not isinstance(image, Mapping):
            image = {i + 1: v for i, v in enumerate(image)}
        if sorted(image) != list(range(1, self.n + 1)) or sorted(image.values()) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {image!r}")
        shift = {1 << (a - 1): 1 << (b - 1) for a, b in image.items()}

        def apply(mask: int) -> int:
            out = 0
            for b in bits_of(mask):
                out |= shift[b]
            return out

        return AtomicLattice(self.n, (apply(m) for m in self.sets))

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "sets": [list(atoms_of(m)) for m in self.sets]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, doc) -> "AtomicLattice":
        if not isinstance(doc, dict) or "n" not in doc or "sets" not in doc:
            raise FormatError('a lattice document needs "n" and "sets" keys')
        n = doc["n"]
        sets = doc["sets"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise FormatError(f'"n" must be an integer, got {n!r}')
        if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
            raise FormatError('"sets" must be a list of lists of atom indices')
        return cls.from_sets(n, sets)

    @classmethod
    def from_json(cls, text: str) -> "AtomicLattice":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
        return cls.from_json_dict(doc)


def _atom_signature(lat: AtomicLattice, atom: int) -> tuple:
    member_sizes = tuple(sorted(m.bit_count() for m in lat.sets if m & atom))
    return (member_sizes, len(lat.upper_covers(atom)))


def lattice_isomorphic(P: AtomicLattice, Q: AtomicLattice) -> Optional[dict[int, int]]:
    """Search for an order-isomorphism; return it as an element map or ``None``.

    A lattice isomorphism must send atoms to atoms and commutes with taking
    supports, so it is induced by an atom permutation whose set-wise image of
    one family equals the other.  The search assigns atom images depth-first,
    pruning with per-atom invariants (sizes of incident members and atom cover
    degree) and rejecting any partial assignment that already maps a fully
    assigned member set outside the target family.
    """
    if P.n != Q.n or len(P) != len(Q):
        return None
    if [m.bit_count() for m in P.sets] != [m.bit_count() for m in Q.sets]:
        return None

    n = P.n
    sig_q: dict[tuple, list[int]] = {}
    for j in range(n):
        sig_q.setdefault(_atom_signature(Q, 1 << j), []).append(j)

    candidates = []
    for i in range(n):
        sig = _atom_signature(P, 1 << i)
        pool = sig_q.get(sig)
        if not pool:
            return None
        candidates.append(pool)

    order = sorted(range(n), key=lambda i: (len(candidates[i]), i))
    position = {atom_index: rank for rank, atom_index in enumerate(order)}
    # Member sets become checkable once their last atom (in assignment order)
    # is placed; group them by that moment.
    closes_at: list[list[int]] = [[] for _ in range(n)]
    for m in P.sets:
        if m:
            closes_at[max(position[i] for i in range(n) if m >> i & 1)].append(m)

    q_members = set(Q.sets)
    image = [0] * n  # image[i] = 0-based target atom for source atom i
    used = [False] * n

    def apply(mask: int) -> int:
        out = 0
        for i in range(n):
            if mask >> i & 1:
                out |= 1 << image[i]
        return out

    def dfs(rank: int) -> bool:
        if rank == n:
            return True
        i = order[rank]
        for j in candidates[i]:
            if used[j]:
                continue
            image[i] = j
            used[j] = True
            if all(apply(m) in q_members for m in closes_at[rank]) and dfs(rank + 1):
                return True
            used[j] = False
        return False

    if not dfs(0):
        return None
    return {m: apply(m) for m in P.sets}
