"""Graphviz DOT rendering of lattice Hasse diagrams.

The writer emits plain DOT text (no graphviz dependency) with ``rankdir=BT``
so diagrams read bottom-up like the usual Hasse picture.  Output is fully
deterministic: nodes appear in canonical lattice order and edges in canonical
cover order.
"""

from __future__ import annotations

from typing import Callable, Mapping, Optional

from .lattice import AtomicLattice, atoms_of

__all__ = ["hasse_dot"]


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _default_label(mask: int) -> str:
    if mask == 0:
        return "0"
    return "{" + ",".join(str(a) for a in atoms_of(mask)) + "}"


def hasse_dot(
    lat: AtomicLattice,
    labels: Optional[Mapping[int, str] | Callable[[int], str]] = None,
    name: str = "lattice",
    skip_bottom: bool = False,
) -> str:
    """Render the Hasse diagram of ``lat`` as DOT text.

    ``labels`` may supply display text per element mask (a mapping or a
    callable); elements it does not cover fall back to their atom-set form.
    ``skip_bottom`` drops the bottom element and its edges, the way lattice
    diagrams are usually drawn.
    """
    if labels is None:
        get = _default_label
    elif callable(labels):
        fallback = labels

        def get(mask: int) -> str:
            text = fallback(mask)
            return _default_label(mask) if text is None else text

    else:
        table = dict(labels)

        def get(mask: int) -> str:
            text = table.get(mask)
            return _default_label(mask) if text is None else text

    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", '  node [shape=plaintext, fontname="Helvetica"];']
    for m in lat.sets:
        if skip_bottom and m == 0:
            continue
        lines.append(f"  n{m} [label={_quote(get(m))}];")
    for lo, hi in lat.covers():
        if skip_bottom and lo == 0:
            continue
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
