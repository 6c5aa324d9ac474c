"""Predicates and constructions on segments and multisegments."""

from __future__ import annotations

from itertools import combinations

from .core import GLClass, Segment, SpClass, _glclass, _seg, dual_label

__all__ = [
    "same_line",
    "contains",
    "is_linked",
    "precedes",
    "dual_segment",
    "dual_glclass",
    "is_irreducible_gl",
    "in_class_MIrr",
    "mirr_obstruction",
    "linked_pairs",
]


def same_line(d1: Segment, d2: Segment) -> bool:
    return d1.label == d2.label


def contains(d1: Segment, d2: Segment) -> bool:
    """True iff ``d2`` is a subset of ``d1``."""
    return d1.label == d2.label and d1.a <= d2.a and d2.b <= d1.b


def is_linked(d1: Segment, d2: Segment) -> bool:
    """Neither segment contains the other and their union is a segment."""
    if d1.label != d2.label:
        return False
    if d1.a <= d2.a and d2.b <= d1.b:
        return False
    if d2.a <= d1.a and d1.b <= d2.b:
        return False
    # union of two integer intervals is an interval iff they overlap or touch
    return d2.a <= d1.b + 1 and d1.a <= d2.b + 1


def precedes(d1: Segment, d2: Segment) -> bool:
    return (d1.label == d2.label and d1.a < d2.a and d1.b < d2.b
            and d2.a <= d1.b + 1)


def dual_segment(d: Segment) -> Segment:
    """Contragredient: ``[nu^a rho, nu^b rho]~ = [nu^-b rho~, nu^-a rho~]``."""
    return _seg(dual_label(d.label), -d.b, -d.a)


def dual_glclass(x: GLClass) -> GLClass:
    return _glclass([dual_segment(s) for s in x])


def linked_pairs(x: GLClass) -> list[tuple[Segment, Segment]]:
    return [(s, t) for s, t in combinations(x, 2) if is_linked(s, t)]


def is_irreducible_gl(x: GLClass) -> bool:
    """Zelevinsky's criterion: the product is irreducible iff no two segments are linked."""
    return not any(is_linked(s, t) for s, t in combinations(x, 2))


def mirr_obstruction(x: SpClass) -> tuple[str, Segment, Segment] | None:
    """First reason ``x`` is outside M_Irr, as ``(reason, seg1, seg2)``, or None."""
    for s, t in combinations(x.gl_part, 2):
        if is_linked(s, t):
            return ("linked", s, t)
        if contains(s, t):
            return ("contains", s, t)
        if contains(t, s):
            return ("contains", t, s)
    return None


def in_class_MIrr(x: SpClass) -> bool:
    return mirr_obstruction(x) is None
