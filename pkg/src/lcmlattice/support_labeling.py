"""The canonical support labeling and its interval-count criteria.

The *support labeling* gives every nonzero element the squarefree product of
the variables of its support atoms.  Whether it coordinatizes the lattice
turns out to be controlled by interval cardinalities N([q, top]):

* the **weak criterion**: if every non-atom nonzero p is the join of two
  atoms a_i, a_j such that, for a fixed r in {i, j}, every atom a_k outside
  supp(p) has N([a_r v a_k, top]) < N([p, top]), then the support labeling is
  a weak coordinatization;
* the **strong criterion** (super-atomic lattices only): the support
  labeling is a strong coordinatization exactly when for every non-atom
  nonzero p with generating pair a_i, a_j and all atoms a_k, a_r in supp(p),
  N([a_i v a_k, top]) <= N([a_r v a_k, top]) or
  N([a_j v a_k, top]) <= N([a_r v a_k, top]);
* the **cover transfer** criterion: below a super-atomic lattice, if the
  support labeling of a lattice is strong and we step down one cover, the
  smaller lattice's support labeling is strong exactly when its refined
  generators coincide with its plain generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import is_strong_coordinatization
from .errors import PreconditionError
from .ideals import Labeling, ideal_from_labeling, weak_ideal
from .lattice import AtomicLattice, atoms_of, bits_of
from .monomial import Monomial
from .superatomic import cover_witness, is_super_atomic

__all__ = [
    "support_labeling",
    "IntervalWitness",
    "IntervalCriterionReport",
    "check_weak_interval_criterion",
    "check_strong_interval_criterion",
    "CoverTransferReport",
    "check_cover_transfer",
]


def support_labeling(lat: AtomicLattice, atom_names: Optional[list[str]] = None) -> Labeling:
    """Label every nonzero element with the product of its support variables.

    Atom i is written ``a<i>`` unless ``atom_names`` supplies n distinct
    names (handy for matching hand-drawn figures that use a, b, c, ...).
    """
    if atom_names is None:
        names = [f"a{i}" for i in range(1, lat.n + 1)]
    else:
        names = list(atom_names)
        if len(names) != lat.n or len(set(names)) != lat.n:
            raise PreconditionError(f"need {lat.n} distinct atom names, got {names!r}")
    by_bit = {1 << i: name for i, name in enumerate(names)}
    return Labeling(
        lat,
        ((p, Monomial((by_bit[b], 1) for b in bits_of(p))) for p in lat.sets if p != 0),
    )


def _atom_index(atom_mask: int) -> int:
    return atom_mask.bit_length()


@dataclass(frozen=True)
class IntervalWitness:
    """Outcome of the weak criterion at one element.

    When satisfied, ``pair`` and ``chosen`` (atom indices) record the joining
    pair and the fixed member that worked.  When not, they record the last
    candidate tried and ``violating`` the outside atom that defeated it;
    all three are absent if the element is not a join of two atoms at all.
    """

    element: tuple[int, ...]
    satisfied: bool
    pair: Optional[tuple[int, int]] = None
    chosen: Optional[int] = None
    violating: Optional[int] = None

    def to_json_dict(self) -> dict:
        return {
            "set": list(self.element),
            "satisfied": self.satisfied,
            "pair": list(self.pair) if self.pair else None,
            "chosen": self.chosen,
            "violating": self.violating,
        }


@dataclass(frozen=True)
class IntervalCriterionReport:
    hypothesis_holds: bool
    witnesses: tuple[IntervalWitness, ...]

    def to_json_dict(self) -> dict:
        return {
            "hypothesis_holds": self.hypothesis_holds,
            "witnesses": [w.to_json_dict() for w in self.witnesses],
        }


def check_weak_interval_criterion(lat: AtomicLattice) -> IntervalCriterionReport:
    """Evaluate the weak criterion, reporting per-element evidence.

    Sufficient, not necessary: when it holds, the support labeling is a weak
    coordinatization.
    """
    n_top = {q: lat.interval_count(q, lat.top) for q in lat.sets}
    witnesses = []
    for p in lat.sets:
        if p == 0 or p.bit_count() == 1:
            continue
        outside = [a for a in lat.atoms if not a & p]
        last: Optional[IntervalWitness] = None
        satisfied = None
        for pr in _joining_pairs(lat, p):
            lo = pr & -pr
            for r in (lo, pr ^ lo):
                bad = next(
                    (k for k in outside if n_top[lat.join_mask(r | k)] >= n_top[p]),
                    None,
                )
                w = IntervalWitness(
                    element=atoms_of(p),
                    satisfied=bad is None,
                    pair=(_atom_index(lo), _atom_index(pr ^ lo)),
                    chosen=_atom_index(r),
                    violating=None if bad is None else _atom_index(bad),
                )
                if bad is None:
                    satisfied = w
                    break
                last = w
            if satisfied:
                break
        witnesses.append(satisfied or last or IntervalWitness(element=atoms_of(p), satisfied=False))
    return IntervalCriterionReport(
        hypothesis_holds=all(w.satisfied for w in witnesses),
        witnesses=tuple(witnesses),
    )


def _joining_pairs(lat: AtomicLattice, p: int) -> list[int]:
    out = []
    bits = list(bits_of(p))
    for i, a in enumerate(bits):
        for b in bits[i + 1 :]:
            if lat.join_mask(a | b) == p:
                out.append(a | b)
    return out


def check_strong_interval_criterion(lat: AtomicLattice) -> tuple[bool, Optional[str]]:
    """Evaluate the strong criterion on a super-atomic lattice.

    Equivalent to the support labeling being a strong coordinatization (the
    equivalence itself is exercised by the test suite, not assumed here).
    """
    if not is_super_atomic(lat):
        raise PreconditionError("lattice is not super-atomic")
    n_top = {q: lat.interval_count(q, lat.top) for q in lat.sets}
    for p in lat.sets:
        if p == 0 or p.bit_count() == 1:
            continue
        pair = _joining_pairs(lat, p)[0]
        ai = pair & -pair
        aj = pair ^ ai
        for ak in bits_of(p):
            n_ik = n_top[lat.join_mask(ai | ak)]
            n_jk = n_top[lat.join_mask(aj | ak)]
            for ar in bits_of(p):
                n_rk = n_top[lat.join_mask(ar | ak)]
                if n_ik > n_rk and n_jk > n_rk:
                    return False, (
                        f"at element {{{','.join(map(str, atoms_of(p)))}}}: both members of the "
                        f"generating pair ({_atom_index(ai)},{_atom_index(aj)}) give strictly larger "
                        f"intervals than atom {_atom_index(ar)} does, against atom {_atom_index(ak)}"
                    )
    return True, None


@dataclass(frozen=True)
class CoverTransferReport:
    """Both sides of the cover-transfer equivalence, evaluated independently."""

    deltas_equal_generators: bool
    strong_on_smaller: bool

    @property
    def agree(self) -> bool:
        return self.deltas_equal_generators == self.strong_on_smaller

    def to_json_dict(self) -> dict:
        return {
            "deltas_equal_generators": self.deltas_equal_generators,
            "strong_on_smaller": self.strong_on_smaller,
            "agree": self.agree,
        }


def check_cover_transfer(
    root: AtomicLattice, larger: AtomicLattice, smaller: AtomicLattice
) -> CoverTransferReport:
    """Evaluate both sides of the cover-transfer criterion.

    Preconditions (each failure named): ``root`` is super-atomic; all three
    lattices share the atom set; ``larger``'s family is contained in
    ``root``'s; ``larger`` covers ``smaller``; and the support labeling of
    ``larger`` is a strong coordinatization.
    """
    if root.n != larger.n or root.n != smaller.n:
        raise PreconditionError("all three lattices must share the same atoms")
    if not is_super_atomic(root):
        raise PreconditionError("the root lattice is not super-atomic")
    if not set(larger.sets) <= set(root.sets):
        raise PreconditionError("the middle lattice is not contained in the root lattice")
    if cover_witness(larger, smaller) is None:
        raise PreconditionError("the middle lattice does not cover the smaller one")
    if not is_strong_coordinatization(larger, support_labeling(larger)):
        raise PreconditionError("the support labeling of the middle lattice is not a strong coordinatization")

    labeling = support_labeling(smaller)
    plain = ideal_from_labeling(smaller, labeling).generators
    refined = weak_ideal(smaller, labeling).generators
    return CoverTransferReport(
        deltas_equal_generators=refined == plain,
        strong_on_smaller=is_strong_coordinatization(smaller, labeling),
    )
