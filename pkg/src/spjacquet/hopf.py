"""Comultiplication m*, the twisted map M* and the coaction mu* on formal sums.

``comult_gl`` is computed through Hopf multiplicativity (product of the
per-segment comultiplications) while ``jacquet_gl_direct`` enumerates cut
vectors directly; the two routes are kept separate so each can check the
other.
"""

from __future__ import annotations

from typing import Iterator

from .core import (
    GL_GL,
    GL_GL_GL,
    GL_SP,
    UNIT,
    FormalSum,
    GLClass,
    Segment,
    SpClass,
    _glclass,
    _seg,
)
from .segments import dual_glclass

__all__ = [
    "CutVector",
    "enumerate_cuts",
    "cut_pieces",
    "comult_segment",
    "comult_gl",
    "graded_piece",
    "iter_graded",
    "comult_on_first",
    "comult_on_second",
    "tensor_multiply",
    "swap",
    "dual_tensor_comult",
    "mult_first_two",
    "M_star",
    "mu_star",
    "jacquet_sp",
    "jacquet_gl_direct",
]

CutVector = tuple  # tuple[int, ...]: one cut point p_i per segment, a_i <= p_i <= b_i + 1


def enumerate_cuts(x: GLClass, q: int) -> list[CutVector]:
    """All cut vectors of ``x`` whose left piece has GL rank ``q``.

    Segment ``i`` is cut at ``p_i``: ``[a_i, p_i - 1]`` goes left and
    ``[p_i, b_i]`` goes right.
    """
    total = x.gl_rank
    if not isinstance(q, int) or q < 0 or q > total:
        raise ValueError(f"graded rank q={q!r} outside [0, {total}]")
    segs = list(x)
    # max left rank still available from segments i.. onward
    tail = [0] * (len(segs) + 1)
    for i in range(len(segs) - 1, -1, -1):
        tail[i] = tail[i + 1] + segs[i].gl_rank
    out: list[CutVector] = []

    def walk(i: int, need: int, acc: list[int]) -> None:
        if i == len(segs):
            if need == 0:
                out.append(tuple(acc))
            return
        s = segs[i]
        m = s.label.rank
        for k in range(s.b - s.a + 2):
            used = m * k
            if used > need:
                break
            if need - used > tail[i + 1]:
                continue
            acc.append(s.a + k)
            walk(i + 1, need - used, acc)
            acc.pop()

    walk(0, q, [])
    return out


def cut_pieces(x: GLClass, cuts: CutVector) -> tuple[GLClass, GLClass]:
    """Left and right products for one cut vector; empty pieces become the unit."""
    left, right = [], []
    for s, p in zip(x, cuts):
        if not s.a <= p <= s.b + 1:
            raise ValueError(f"cut point {p} outside [{s.a}, {s.b + 1}] for {s!r}")
        if p > s.a:
            left.append(_seg(s.label, s.a, p - 1))
        if p <= s.b:
            right.append(_seg(s.label, p, s.b))
    return _glclass(left), _glclass(right)


def comult_segment(d: Segment) -> FormalSum:
    """m*(Z(d)) = sum over p of Z([a, p-1]) (x) Z([p, b])."""
    data = {}
    for p in range(d.a, d.b + 2):
        left = _glclass([_seg(d.label, d.a, p - 1)]) if p > d.a else UNIT
        right = _glclass([_seg(d.label, p, d.b)]) if p <= d.b else UNIT
        data[(left, right)] = 1
    return FormalSum._trusted(GL_GL, data)


def tensor_multiply(s: FormalSum, t: FormalSum) -> FormalSum:
    """Componentwise product of two sums over pairs (or triples) of GL classes."""
    if s.kind != t.kind or s.kind not in (GL_GL, GL_GL_GL):
        raise TypeError(f"cannot multiply sums of kind {s.kind} and {t.kind}")
    data: dict = {}
    for u, mu in s.items():
        for v, mv in t.items():
            key = tuple(_glclass(list(x) + list(y)) for x, y in zip(u, v))
            data[key] = data.get(key, 0) + mu * mv
    return FormalSum._trusted(s.kind, data)


def comult_gl(x: GLClass) -> FormalSum:
    """m*(x) for a product of segment representations, all graded pieces at once."""
    result = FormalSum._trusted(GL_GL, {(UNIT, UNIT): 1})
    for s in x:
        result = tensor_multiply(result, comult_segment(s))
    return result


def graded_piece(t: FormalSum, q: int) -> FormalSum:
    """Terms whose first tensor factor has rank ``q``."""
    return t.filter(lambda k: k[0].gl_rank == q)


def jacquet_gl_direct(x: GLClass, q: int) -> FormalSum:
    """Degree-``q`` piece of m*(x) by direct enumeration of cut vectors."""
    data: dict = {}
    for cuts in enumerate_cuts(x, q):
        key = cut_pieces(x, cuts)
        data[key] = data.get(key, 0) + 1
    return FormalSum._trusted(GL_GL, data)


def _expand(t: FormalSum, position: int) -> FormalSum:
    data: dict = {}
    for pair, mult in t.items():
        for split, m2 in comult_gl(pair[position]).items():
            key = split + (pair[1],) if position == 0 else (pair[0],) + split
            data[key] = data.get(key, 0) + mult * m2
    return FormalSum._trusted(GL_GL_GL, data)


def comult_on_first(t: FormalSum) -> FormalSum:
    """(m* (x) 1) applied to a sum over pairs."""
    if t.kind != GL_GL:
        raise TypeError(f"expected a sum of kind {GL_GL}, got {t.kind}")
    return _expand(t, 0)


def comult_on_second(t: FormalSum) -> FormalSum:
    """(1 (x) m*) applied to a sum over pairs."""
    if t.kind != GL_GL:
        raise TypeError(f"expected a sum of kind {GL_GL}, got {t.kind}")
    return _expand(t, 1)


def swap(t: FormalSum) -> FormalSum:
    if t.kind != GL_GL:
        raise TypeError(f"swap expects a sum of kind {GL_GL}, got {t.kind}")
    return t.map_terms(lambda k: (k[1], k[0]))


def dual_tensor_comult(t: FormalSum) -> FormalSum:
    """x (x) y  |->  x~ (x) m*(y), expanded into triples."""
    if t.kind != GL_GL:
        raise TypeError(f"expected a sum of kind {GL_GL}, got {t.kind}")
    data: dict = {}
    for (x, y), mult in t.items():
        dx = dual_glclass(x)
        for (y1, y2), m2 in comult_gl(y).items():
            key = (dx, y1, y2)
            data[key] = data.get(key, 0) + mult * m2
    return FormalSum._trusted(GL_GL_GL, data)


def mult_first_two(t: FormalSum) -> FormalSum:
    if t.kind != GL_GL_GL:
        raise TypeError(f"expected a sum of kind {GL_GL_GL}, got {t.kind}")
    return t.map_terms(lambda k: (_glclass(list(k[0]) + list(k[1])), k[2]), kind=GL_GL)


def M_star(x: GLClass) -> FormalSum:
    """M* = (m (x) 1) o (~ (x) m*) o s o m*."""
    return mult_first_two(dual_tensor_comult(swap(comult_gl(x))))


def mu_star(x: SpClass) -> FormalSum:
    """mu*(pi |x sigma) = M*(pi) |x (1 (x) sigma) for supercuspidal sigma."""
    sigma = x.sp_label
    data = {}
    for (u, v), mult in M_star(x.gl_part).items():
        data[(u, tuple.__new__(SpClass, (v, sigma)))] = mult
    return FormalSum._trusted(GL_SP, data)


def jacquet_sp(x: SpClass, l: int) -> FormalSum:
    """Jacquet module for the maximal Levi GL_l x G_{n-l}, semisimplified."""
    n = x.sp_rank
    if not isinstance(l, int) or l < 0 or l > n:
        raise ValueError(f"Levi rank l={l!r} outside [0, {n}]")
    if l > x.gl_part.gl_rank:
        return FormalSum(GL_SP)
    return mu_star(x).filter(lambda k: k[0].gl_rank == l)


def iter_graded(t: FormalSum) -> Iterator[tuple[int, FormalSum]]:
    """Yield ``(q, piece)`` for every nonempty graded piece, by increasing q."""
    by_rank: dict[int, dict] = {}
    for k, v in t.items():
        by_rank.setdefault(k[0].gl_rank, {})[k] = v
    for q in sorted(by_rank):
        yield q, FormalSum._trusted(t.kind, by_rank[q])
