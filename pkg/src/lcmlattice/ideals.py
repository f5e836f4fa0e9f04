"""Labeled lattices, the monomial ideals they generate, and lcm-lattices.

The constructions here connect the two worlds of the package:

* a *labeling* attaches non-unit monomials to some elements of a finite
  atomic lattice (absent = label 1);
* each atom ``a`` yields a generator ``x(a)``, the product of the labels of
  all elements that are **not** above ``a``; collecting these over all atoms
  gives the plain generated ideal;
* each atom also yields a refined generator ``delta(a)``: the gcd, over all
  elements ``p >= a`` and all atom subsets ``T`` joining to ``p``, of
  ``lcm{x(b) : b in T}``; collecting these gives the weak generated ideal;
* the *lcm-lattice* of a monomial ideal is the set of lcms of subsets of its
  minimal generators ordered by divisibility, and forgetting the monomials
  leaves a finite atomic lattice whose atoms are the minimal generators;
* from an lcm-lattice (or any order-isomorphic copy of one) a canonical
  labeling is *recovered*: ``m_p = gcd{monomial(t) : t > p} / monomial(p)``.

File formats: labeling JSON is
``{"lattice": <lattice JSON or filename>, "labels": [{"set": [...],
"monomial": "..."}, ...]}``; ideal text is one monomial per line with ``#``
comments.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Callable, Iterable, Iterator, Mapping, Optional, Union

from .errors import (
    CapExceededError,
    DegenerateIdealError,
    FormatError,
    MonomialParseError,
    NotAnElementError,
    PreconditionError,
    ValidationError,
)
from .lattice import AtomicLattice, atoms_of, bits_of, mask_of
from .monomial import ONE, Monomial, gcd_all, lcm_all

__all__ = [
    "Labeling",
    "MonomialIdeal",
    "LcmLattice",
    "atom_generator",
    "element_generator",
    "ideal_from_labeling",
    "weak_generator",
    "weak_ideal",
    "lcm_lattice",
    "recovered_labeling",
    "parse_ideal_text",
    "render_ideal_text",
    "labeling_from_json_dict",
    "load_labeling",
]

MAX_GENERATORS = 20


class Labeling:
    """A partial assignment of non-unit monomials to lattice elements.

    Unlabeled elements implicitly carry the unit monomial, so an explicit
    unit label is rejected rather than silently normalized away.
    """

    __slots__ = ("lattice", "_table")

    def __init__(
        self,
        lattice: AtomicLattice,
        assignments: Union[Mapping[int, Monomial], Iterable[tuple[int, Monomial]]] = (),
    ):
        items = assignments.items() if isinstance(assignments, Mapping) else assignments
        table: dict[int, Monomial] = {}
        for p, m in items:
            if p not in lattice:
                raise NotAnElementError(f"labeled set {atoms_of(p) if isinstance(p, int) else p!r} is not in the lattice")
            if not isinstance(m, Monomial):
                m = Monomial.parse(str(m))
            if m.is_one:
                raise ValidationError(
                    f"element {set(atoms_of(p)) or '{}'} labeled with the unit monomial; leave it unlabeled instead"
                )
            if p in table and table[p] != m:
                raise ValidationError(f"element {set(atoms_of(p))} labeled twice, with {table[p]} and {m}")
            table[p] = m
        self.lattice = lattice
        self._table = {p: table[p] for p in sorted(table, key=lambda q: (q.bit_count(), q))}

    @classmethod
    def from_sets(
        cls,
        lattice: AtomicLattice,
        assignments: Union[Mapping[tuple, Union[str, Monomial]], Iterable[tuple[Iterable[int], Union[str, Monomial]]]],
    ) -> "Labeling":
        """Build from (atom-index iterable, monomial or string) pairs."""
        items = assignments.items() if isinstance(assignments, Mapping) else assignments
        return cls(lattice, ((mask_of(s, lattice.n), m) for s, m in items))

    def label(self, p: int) -> Monomial:
        if p not in self.lattice:
            raise NotAnElementError(f"{atoms_of(p) if isinstance(p, int) else p!r} is not in the lattice")
        return self._table.get(p, ONE)

    @property
    def labeled_elements(self) -> tuple[int, ...]:
        return tuple(self._table)

    def items(self) -> Iterator[tuple[int, Monomial]]:
        return iter(self._table.items())

    def map_monomials(self, fn: Callable[[Monomial], Monomial]) -> "Labeling":
        """A new labeling with every label replaced by ``fn(label)``."""
        return Labeling(self.lattice, ((p, fn(m)) for p, m in self._table.items()))

    def __len__(self) -> int:
        return len(self._table)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Labeling)
            and self.lattice == other.lattice
            and self._table == other._table
        )

    def __hash__(self) -> int:
        return hash((self.lattice, tuple(self._table.items())))

    def __repr__(self) -> str:
        return f"Labeling({len(self._table)} of {len(self.lattice)} elements labeled)"

    def to_json_dict(self) -> dict:
        return {
            "lattice": self.lattice.to_json_dict(),
            "labels": [
                {"set": list(atoms_of(p)), "monomial": str(m)} for p, m in self._table.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def labeling_from_json_dict(
    doc,
    base_dir: Optional[Path] = None,
    lattice: Optional[AtomicLattice] = None,
) -> Labeling:
    """Read a labeling document.

    ``doc["lattice"]`` may be an inline lattice document or a filename; the
    filename form needs ``base_dir`` to resolve against.  An explicit
    ``lattice`` argument overrides whatever the document says.
    """
    if not isinstance(doc, dict) or "labels" not in doc:
        raise FormatError('a labeling document needs a "labels" key')
    if lattice is None:
        ref = doc.get("lattice")
        if ref is None:
            raise FormatError('a labeling document needs a "lattice" key (inline or filename)')
        if isinstance(ref, str):
            if base_dir is None:
                raise FormatError("labeling references a lattice file but no base directory was given")
            ref_path = Path(base_dir) / ref
            lattice = AtomicLattice.from_json(ref_path.read_text())
        elif isinstance(ref, dict):
            lattice = AtomicLattice.from_json_dict(ref)
        else:
            raise FormatError('"lattice" must be an object or a filename string')
    labels = doc["labels"]
    if not isinstance(labels, list):
        raise FormatError('"labels" must be a list')
    pairs = []
    for entry in labels:
        if not isinstance(entry, dict) or "set" not in entry or "monomial" not in entry:
            raise FormatError('each label entry needs "set" and "monomial" keys')
        if not isinstance(entry["monomial"], str):
            raise FormatError(f'"monomial" must be a string, got {entry["monomial"]!r}')
        try:
            m = Monomial.parse(entry["monomial"])
        except MonomialParseError as exc:
            raise FormatError(f"bad monomial for set {entry['set']}: {exc}") from None
        pairs.append((mask_of(entry["set"], lattice.n), m))
    return Labeling(lattice, pairs)


def load_labeling(path: Union[str, Path]) -> Labeling:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON: {exc}") from None
    return labeling_from_json_dict(doc, base_dir=path.parent)


class MonomialIdeal:
    """A monomial ideal, kept as the generator list it was built from.

    The raw generators are preserved (duplicates and divisibilities intact)
    because diagnostic output wants the atom-indexed list; use
    :attr:`minimal_generators` for the canonical minimal generating set.
    """

    __slots__ = ("generators", "_minimal")

    def __init__(self, generators: Iterable[Monomial]):
        gens = []
        for g in generators:
            if not isinstance(g, Monomial):
                g = Monomial.parse(str(g))
            gens.append(g)
        self.generators = tuple(gens)
        self._minimal = None

    @property
    def minimal_generators(self) -> tuple[Monomial, ...]:
        """Generators with duplicates and multiples removed, input order kept."""
        if self._minimal is None:
            gens = self.generators
            keep = []
            for i, g in enumerate(gens):
                redundant = any(
                    (h != g and h.divides(g)) or (h == g and j < i)
                    for j, h in enumerate(gens)
                    if j != i
                )
                if not redundant:
                    keep.append(g)
            self._minimal = tuple(keep)
        return self._minimal

    @property
    def has_unit_generator(self) -> bool:
        return any(g.is_one for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return "MonomialIdeal(" + ", ".join(str(g) for g in self.generators) + ")"


def parse_ideal_text(text: str) -> MonomialIdeal:
    """Parse ideal text: one monomial per line, ``#`` starts a comment."""
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            gens.append(Monomial.parse(line))
        except MonomialParseError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    return MonomialIdeal(gens)


def render_ideal_text(ideal: MonomialIdeal) -> str:
    return "".join(str(g) + "\n" for g in ideal.generators)


# ---------------------------------------------------------------------------
# Generators from a labeling


def element_generator(lat: AtomicLattice, labeling: Labeling, p: int) -> Monomial:
    """Product of the labels of all elements not above ``p``.

    On atoms this is the ideal generator ``x(a)``; on general elements it is
    the comparison map whose injectivity makes chain-per-variable labelings
    work.
    """
    if labeling.lattice != lat:
        raise PreconditionError("labeling belongs to a different lattice")
    prod = ONE
    for q in lat.filter_complement(p):
        prod = prod * labeling.label(q)
    return prod


def atom_generator(lat: AtomicLattice, labeling: Labeling, atom: int) -> Monomial:
    """The generator ``x(a)`` contributed by one atom."""
    if atom.bit_count() != 1 or atom not in lat:
        raise PreconditionError(f"{atoms_of(atom)} is not an atom of the lattice")
    return element_generator(lat, labeling, atom)


def ideal_from_labeling(lat: AtomicLattice, labeling: Labeling) -> MonomialIdeal:
    """The ideal generated by ``x(a)`` over all atoms, in atom order."""
    return MonomialIdeal(atom_generator(lat, labeling, a) for a in lat.atoms)


def _joining_gcd(lat: AtomicLattice, x_of: Mapping[int, Monomial], p: int) -> Monomial:
    """gcd over atom subsets ``T`` joining to ``p`` of ``lcm{x(b) : b in T}``."""
    acc = None
    for T in lat.joining_sets(p):
        term = lcm_all(x_of[b] for b in bits_of(T))
        acc = term if acc is None else acc.gcd(term)
        if acc.is_one:
            break
    return acc if acc is not None else ONE


def weak_generator(lat: AtomicLattice, labeling: Labeling, atom: int) -> Monomial:
    """The refined generator ``delta(a)``; always divides ``x(a)``."""
    if atom.bit_count() != 1 or atom not in lat:
        raise PreconditionError(f"{atoms_of(atom)} is not an atom of the lattice")
    x_of = {a: atom_generator(lat, labeling, a) for a in lat.atoms}
    acc = None
    for p in lat.filter(atom):
        term = _joining_gcd(lat, x_of, p)
        acc = term if acc is None else acc.gcd(term)
    return acc


def weak_ideal(lat: AtomicLattice, labeling: Labeling) -> MonomialIdeal:
    """The ideal generated by ``delta(a)`` over all atoms, in atom order.

    Shares one pass over the lattice: the inner gcd is computed once per
    element, then folded into every atom below it.
    """
    if labeling.lattice != lat:
        raise PreconditionError("labeling belongs to a different lattice")
    x_of = {a: atom_generator(lat, labeling, a) for a in lat.atoms}
    per_element = {p: _joining_gcd(lat, x_of, p) for p in lat.sets if p != 0}
    deltas = []
    for a in lat.atoms:
        acc = None
        for p, term in per_element.items():
            if a & ~p == 0:
                acc = term if acc is None else acc.gcd(term)
        deltas.append(acc)
    return MonomialIdeal(deltas)


# ---------------------------------------------------------------------------
# LCM lattices


class LcmLattice:
    """All lcms of subsets of an ideal's minimal generators, by divisibility.

    Forgetting the monomials leaves a finite atomic lattice over the minimal
    generators (generator ``i`` is atom ``i``): the support of an element is
    the set of generators dividing it, supports are distinct, and the family
    of supports is intersection-closed.  :meth:`abstract` returns that view.
    """

    __slots__ = ("generators", "monomials", "_mask_of", "_monomial_of", "_abstract")

    def __init__(self, generators: Iterable[Monomial]):
        gens = tuple(generators)
        if not gens:
            raise DegenerateIdealError("the zero ideal has no lcm-lattice")
        if any(g.is_one for g in gens):
            raise DegenerateIdealError("the unit monomial is a generator; the lcm-lattice is undefined")
        if len(gens) > MAX_GENERATORS:
            raise CapExceededError(f"{len(gens)} generators exceed the supported maximum {MAX_GENERATORS}")

        elements = {ONE}
        for g in gens:
            elements.update(e.lcm(g) for e in tuple(elements))

        mask_table = {}
        for m in elements:
            mask = 0
            for i, g in enumerate(gens):
                if g.divides(m):
                    mask |= 1 << i
            mask_table[m] = mask
        assert len(set(mask_table.values())) == len(mask_table), "support map must be injective"

        order = sorted(elements, key=lambda m: (mask_table[m].bit_count(), mask_table[m]))
        self.generators = gens
        self.monomials = tuple(order)
        self._mask_of = mask_table
        self._monomial_of = {mask: m for m, mask in mask_table.items()}
        self._abstract = None

    def abstract(self) -> AtomicLattice:
        """The underlying atomic lattice, with generator ``i`` as atom ``i``."""
        if self._abstract is None:
            self._abstract = AtomicLattice(len(self.generators), self._mask_of.values())
        return self._abstract

    def monomial_of(self, mask: int) -> Monomial:
        try:
            return self._monomial_of[mask]
        except KeyError:
            raise NotAnElementError(f"no element has support {atoms_of(mask)}") from None

    def mask_of(self, m: Monomial) -> int:
        try:
            return self._mask_of[m]
        except KeyError:
            raise NotAnElementError(f"{m} is not an element of the lcm-lattice") from None

    @property
    def top_monomial(self) -> Monomial:
        return self.monomials[-1]

    def hasse_labels(self) -> dict[int, str]:
        """Display labels (monomial strings) keyed by abstract element, for DOT."""
        return {mask: str(m) for m, mask in self._mask_of.items()}

    def covers_monomials(self) -> tuple[tuple[Monomial, Monomial], ...]:
        return tuple(
            (self._monomial_of[lo], self._monomial_of[hi]) for lo, hi in self.abstract().covers()
        )

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials)

    def __contains__(self, m: Monomial) -> bool:
        return m in self._mask_of

    def __repr__(self) -> str:
        return f"LcmLattice({len(self.generators)} generators, {len(self.monomials)} elements)"


def lcm_lattice(ideal: Union[MonomialIdeal, Iterable[Monomial]]) -> LcmLattice:
    """The lcm-lattice of an ideal's minimal generators."""
    if not isinstance(ideal, MonomialIdeal):
        ideal = MonomialIdeal(ideal)
    return LcmLattice(ideal.minimal_generators)


def recovered_labeling(lat: AtomicLattice, monomial_of: Mapping[int, Monomial]) -> Labeling:
    """The canonical labeling read off an isomorphic copy of an lcm-lattice.

    ``monomial_of`` must assign to every element of ``lat`` the monomial of
    its image under an order-isomorphism onto some lcm-lattice.  Each element
    gets ``gcd{monomial_of[t] : t > p} / monomial_of[p]`` (the empty gcd at
    the top is the top's own monomial, so the top always ends up unlabeled);
    unit labels are dropped.
    """
    assignments = {}
    for p in lat.sets:
        above = [monomial_of[q] for q in lat.filter(p) if q != p]
        g = gcd_all(above) if above else monomial_of[lat.top]
        m = g / monomial_of[p]
        if not m.is_one:
            assignments[p] = m
    return Labeling(lat, assignments)
