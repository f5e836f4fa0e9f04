"""Monomials in commuting named variables, with divisibility arithmetic.

A monomial is a finite product of variable powers with positive integer
exponents; the empty product is the unit and prints as ``1``.  The surface
grammar is deliberately small::

    monomial := "1" | term ("*" term)*
    term     := ident ("^" uint)?
    ident    := [A-Za-z_][A-Za-z0-9_]*
    uint     := positive decimal integer (no leading zeros)

``a^1`` parses but always renders as ``a``.  Rendering is canonical: variables
shaped like ``a<k>`` (the default names given to lattice atoms) come first in
numeric order, every other variable follows lexicographically, so equal
monomials always produce identical strings.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

from .errors import MonomialParseError, NotDivisibleError

__all__ = ["Monomial", "ONE", "lcm_all", "gcd_all"]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_UINT = re.compile(r"[1-9][0-9]*")
_ATOM_NAME = re.compile(r"a([1-9][0-9]*)")


def _variable_key(name: str):
    m = _ATOM_NAME.fullmatch(name)
    if m:
        return (0, int(m.group(1)), name)
    return (1, 0, name)


class Monomial:
    """An immutable, hashable monomial.

    Construct from a mapping or an iterable of ``(variable, exponent)`` pairs;
    repeated variables accumulate.  All exponents must be positive integers
    (zero-exponent entries are rejected rather than silently dropped, except
    when they arise internally from exact division).
    """

    __slots__ = ("_exps", "_hash")

    def __init__(self, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        acc: dict[str, int] = {}
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        for name, exp in items:
            if not isinstance(name, str) or not _IDENT.fullmatch(name):
                raise ValueError(f"invalid variable name: {name!r}")
            if not isinstance(exp, int) or isinstance(exp, bool) or exp <= 0:
                raise ValueError(f"exponent of {name!r} must be a positive int, got {exp!r}")
            acc[name] = acc.get(name, 0) + exp
        self._exps = tuple(sorted(acc.items(), key=lambda it: _variable_key(it[0])))
        self._hash = hash(self._exps)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def variable(cls, name: str, exp: int = 1) -> "Monomial":
        return cls(((name, exp),))

    @classmethod
    def one(cls) -> "Monomial":
        return ONE

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse the strict grammar above; raise :class:`MonomialParseError` otherwise."""
        if text == "1":
            return ONE
        pairs = []
        pos = 0
        n = len(text)
        while True:
            m = _IDENT.match(text, pos)
            if not m:
                raise MonomialParseError("expected a variable name", pos)
            name = m.group()
            pos = m.end()
            exp = 1
            if pos < n and text[pos] == "^":
                pos += 1
                m = _UINT.match(text, pos)
                if not m:
                    raise MonomialParseError("expected a positive exponent after '^'", pos)
                exp = int(m.group())
                pos = m.end()
            pairs.append((name, exp))
            if pos == n:
                break
            if text[pos] != "*":
                raise MonomialParseError(f"unexpected character {text[pos]!r}", pos)
            pos += 1
        return cls(pairs)

    # -- inspection ----------------------------------------------------------

    @property
    def is_one(self) -> bool:
        return not self._exps

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._exps)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self._exps)

    def exponent(self, name: str) -> int:
        for v, e in self._exps:
            if v == name:
                return e
        return 0

    def items(self) -> Iterator[tuple[str, int]]:
        return iter(self._exps)

    # -- arithmetic ----------------------------------------------------------

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        acc = dict(self._exps)
        for v, e in other._exps:
            acc[v] = acc.get(v, 0) + e
        return Monomial(acc)

    def lcm(self, other: "Monomial") -> "Monomial":
        acc = dict(self._exps)
        for v, e in other._exps:
            if e > acc.get(v, 0):
                acc[v] = e
        return Monomial(acc)

    def gcd(self, other: "Monomial") -> "Monomial":
        theirs = dict(other._exps)
        return Monomial({v: min(e, theirs[v]) for v, e in self._exps if v in theirs and min(e, theirs[v]) > 0})

    def divides(self, other: "Monomial") -> bool:
        theirs = dict(other._exps)
        return all(e <= theirs.get(v, 0) for v, e in self._exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact division; raises :class:`NotDivisibleError` when it would not be exact."""
        if not isinstance(other, Monomial):
            return NotImplemented
        if not other.divides(self):
            raise NotDivisibleError(f"{other} does not divide {self}")
        theirs = dict(other._exps)
        return Monomial({v: e - theirs.get(v, 0) for v, e in self._exps if e - theirs.get(v, 0) > 0})

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self._exps)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


ONE = Monomial()


def lcm_all(monomials: Iterable[Monomial]) -> Monomial:
    """Least common multiple of a finite family; the empty lcm is 1."""
    out = ONE
    for m in monomials:
        out = out.lcm(m)
    return out


def gcd_all(monomials: Iterable[Monomial]) -> Monomial:
    """Greatest common divisor of a finite family; the empty gcd is 1."""
    it = iter(monomials)
    try:
        out = next(it)
    except StopIteration:
        return ONE
    for m in it:
        if out.is_one:
            break
        out = out.gcd(m)
    return out
