"""Multiplicity accounting and exhaustive checks of the multiplicity bounds.

Multiplicity means the coefficient of a basis element in the canonical
semisimplified formal sum.  Checks return violations as data; nothing in
this module asserts.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .core import (
    GL_SP,
    CuspidalLabel,
    FormalSum,
    GLClass,
    Segment,
    SpClass,
    SpCuspidalLabel,
    _glclass,
    _seg,
    dual_label,
    grading_defects,
)
from .hopf import mu_star
from .segments import (
    contains,
    dual_glclass,
    is_irreducible_gl,
    is_linked,
    mirr_obstruction,
)

__all__ = [
    "NotInMIrr",
    "MultiplicityReport",
    "Violation",
    "SweepResult",
    "DistinctnessResult",
    "multiplicity_table",
    "multiplicity_reports",
    "is_self_dual",
    "label_closure",
    "enumerate_mirr",
    "check_theorem_main",
    "check_lemma_heredity",
    "check_distinctness",
    "raw_mu_star",
    "DEFAULT_LABELS",
    "DEFAULT_SP_LABELS",
]


class NotInMIrr(ValueError):
    """Input is not a pairwise unlinked, non-nested product over a supercuspidal."""

    def __init__(self, x: SpClass, reason: str, s: Segment, t: Segment):
        self.input = x
        self.reason = reason
        self.pair = (s, t)
        if reason == "linked":
            msg = f"segments {s!r} and {t!r} are linked"
        else:
            msg = f"segment {s!r} contains {t!r}"
        super().__init__(f"{msg}; input is outside M_Irr")


def _require_mirr(x: SpClass) -> None:
    bad = mirr_obstruction(x)
    if bad is not None:
        raise NotInMIrr(x, *bad)


def is_self_dual(x: GLClass) -> bool:
    return dual_glclass(x) == x


def _irreducibility_flags(table: FormalSum) -> list:
    return [k for k in table
            if not is_irreducible_gl(k[0]) or not is_irreducible_gl(k[1].gl_part)]


@dataclass(frozen=True)
class MultiplicityReport:
    input: SpClass
    levi_rank: int
    table: FormalSum
    max_multiplicity: int
    witnesses: tuple
    irreducibility_flags: tuple

    @classmethod
    def from_table(cls, x: SpClass, l: int, table: FormalSum) -> MultiplicityReport:
        top = max((v for _, v in table.items()), default=0)
        witnesses = tuple(k for k, v in table.items() if v == top) if top else ()
        return cls(x, l, table, top, witnesses, tuple(_irreducibility_flags(table)))


def _split_by_levi(x: SpClass, total: FormalSum) -> list[FormalSum]:
    pieces: list[dict] = [dict() for _ in range(x.sp_rank + 1)]
    for k, v in total.items():
        pieces[k[0].gl_rank][k] = v
    return [FormalSum._trusted(GL_SP, d) for d in pieces]


def multiplicity_reports(x: SpClass) -> list[MultiplicityReport]:
    """One report per Levi rank ``l = 0 .. sp_rank(x)``."""
    _require_mirr(x)
    pieces = _split_by_levi(x, mu_star(x))
    return [MultiplicityReport.from_table(x, l, t) for l, t in enumerate(pieces)]


def multiplicity_table(x: SpClass, l: int) -> MultiplicityReport:
    _require_mirr(x)
    n = x.sp_rank
    if not isinstance(l, int) or not 0 <= l <= n:
        raise ValueError(f"Levi rank l={l!r} outside [0, {n}]")
    table = mu_star(x).filter(lambda k: k[0].gl_rank == l)
    return MultiplicityReport.from_table(x, l, table)


# -- exhaustive sweeps ------------------------------------------------------

DEFAULT_LABELS = (
    CuspidalLabel("rho", 1, "rho"),
    CuspidalLabel("pi", 2),
)
DEFAULT_SP_LABELS = (SpCuspidalLabel("sigma", 1),)


@dataclass(frozen=True)
class Violation:
    """A computed multiplicity contradicting one of the claimed bounds.

    ``kind`` is ``"multiplicity>2"`` or ``"non-self-dual multiplicity 2"``.
    """

    kind: str
    input: SpClass
    levi_rank: int
    witness: tuple
    multiplicity: int


@dataclass
class SweepResult:
    violations: list[Violation] = field(default_factory=list)
    instances: int = 0
    reports: int = 0
    max_multiplicity: int = 0
    multiplicity_two_witnesses: int = 0
    first_multiplicity_two: tuple | None = None
    irreducibility_flags: int = 0
    grading_errors: int = 0

    def __bool__(self):
        return not self.violations

    def merge(self, other: SweepResult) -> None:
        self.violations.extend(other.violations)
        self.instances += other.instances
        self.reports += other.reports
        self.max_multiplicity = max(self.max_multiplicity, other.max_multiplicity)
        self.multiplicity_two_witnesses += other.multiplicity_two_witnesses
        if self.first_multiplicity_two is None:
            self.first_multiplicity_two = other.first_multiplicity_two
        self.irreducibility_flags += other.irreducibility_flags
        self.grading_errors += other.grading_errors

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for v in self.violations:
            out[v.kind] = out.get(v.kind, 0) + 1
        return out


def label_closure(labels: Iterable[CuspidalLabel]) -> list[CuspidalLabel]:
    """The labels together with their contragredients, sorted and deduplicated."""
    out = set()
    for lab in labels:
        out.add(lab)
        out.add(dual_label(lab))
    return sorted(out)


def _compatible(s: Segment, t: Segment) -> bool:
    return not (is_linked(s, t) or contains(s, t) or contains(t, s))


def enumerate_mirr(labels: Sequence[CuspidalLabel], sp_labels: Sequence[SpCuspidalLabel],
                   min_exp: int, max_exp: int, max_segments: int,
                   max_rank: int | None = None, dual_lines: bool = True) -> Iterator[SpClass]:
    """Every M_Irr class with segments on ``labels`` and exponents in range.

    With ``dual_lines`` the contragredient labels are used as well.
    ``max_rank`` bounds the rank n of G_n.
    """
    lines = label_closure(labels) if dual_lines else sorted(set(labels))
    segs = [_seg(lab, a, b)
            for lab in lines
            for a in range(min_exp, max_exp + 1)
            for b in range(a, max_exp + 1)]
    for sigma in sp_labels:
        budget = None if max_rank is None else max_rank - sigma.rank
        if budget is not None and budget < 0:
            continue

        def grow(start: int, chosen: list[Segment], rank: int):
            yield tuple.__new__(SpClass, (_glclass(list(chosen)), sigma))
            if len(chosen) == max_segments:
                return
            for i in range(start, len(segs)):
                s = segs[i]
                r = rank + s.gl_rank
                if budget is not None and r > budget:
                    continue
                if all(_compatible(s, t) for t in chosen):
                    chosen.append(s)
                    yield from grow(i + 1, chosen, r)
                    chosen.pop()

        yield from grow(0, [], 0)


def _check_instance(x: SpClass, result: SweepResult) -> None:
    result.instances += 1
    total = mu_star(x)
    result.grading_errors += len(grading_defects(total, x.sp_rank))
    for l, table in enumerate(_split_by_levi(x, total)):
        report = MultiplicityReport.from_table(x, l, table)
        result.reports += 1
        result.max_multiplicity = max(result.max_multiplicity, report.max_multiplicity)
        result.irreducibility_flags += len(report.irreducibility_flags)
        for k, v in report.table.items():
            if v > 2:
                result.violations.append(
                    Violation("multiplicity>2", x, report.levi_rank, k, v))
            elif v == 2:
                result.multiplicity_two_witnesses += 1
                if result.first_multiplicity_two is None:
                    result.first_multiplicity_two = (x, report.levi_rank, k)
                if not is_self_dual(k[0]):
                    result.violations.append(
                        Violation("non-self-dual multiplicity 2", x, report.levi_rank, k, v))


def _check_chunk(chunk: list[SpClass]) -> SweepResult:
    result = SweepResult()
    for x in chunk:
        _check_instance(x, result)
    return result


def check_theorem_main(labels: Sequence[CuspidalLabel] = DEFAULT_LABELS,
                       sp_labels: Sequence[SpCuspidalLabel] = DEFAULT_SP_LABELS,
                       min_exp: int = -2, max_exp: int = 2, max_segments: int = 3,
                       max_rank: int | None = None, jobs: int = 1,
                       chunk_size: int = 256, dual_lines: bool = True) -> SweepResult:
    """Sweep every M_Irr instance in the bounds and every Levi rank.

    Flags multiplicities above 2 and multiplicity-2 constituents whose GL
    factor is not self-dual.  ``jobs > 1`` distributes chunks over worker
    processes; the merged result does not depend on scheduling.
    """
    instances = enumerate_mirr(labels, sp_labels, min_exp, max_exp, max_segments, max_rank,
                               dual_lines)
    result = SweepResult()
    if jobs <= 1:
        for x in instances:
            _check_instance(x, result)
        return result
    chunks = []
    while True:
        chunk = list(itertools.islice(instances, chunk_size))
        if not chunk:
            break
        chunks.append(chunk)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_check_chunk, chunks):
            result.merge(part)
    return result


def check_lemma_heredity(min_exp: int = -3, max_exp: int = 3,
                         labels: Sequence[CuspidalLabel] | None = None) -> list[tuple]:
    """Truncations of unlinked, non-nested pairs stay unlinked.

    For every such pair and all cut points, both the initial pieces
    ``[a1, c1], [a2, c2]`` and the final pieces ``[c1, b1], [c2, b2]`` are
    checked.  Returns ``(piece_kind, d1, d2, c1, c2)`` for each failure.
    """
    if labels is None:
        labels = (CuspidalLabel("rho", 1),)
    segs = [_seg(lab, a, b)
            for lab in labels
            for a in range(min_exp, max_exp + 1)
            for b in range(a, max_exp + 1)]
    failures = []
    for d1, d2 in itertools.product(segs, repeat=2):
        if is_linked(d1, d2) or contains(d1, d2) or contains(d2, d1):
            continue
        for c1 in range(d1.a, d1.b + 1):
            for c2 in range(d2.a, d2.b + 1):
                if is_linked(_seg(d1.label, d1.a, c1), _seg(d2.label, d2.a, c2)):
                    failures.append(("initial", d1, d2, c1, c2))
                if is_linked(_seg(d1.label, c1, d1.b), _seg(d2.label, c2, d2.b)):
                    failures.append(("final", d1, d2, c1, c2))
    return failures


# -- distinctness before duality merging -------------------------------------

_RAW_DUAL = "\x00~"


def _lift(label: CuspidalLabel) -> CuspidalLabel:
    # Give every label a private partner so dualization never merges with
    # an existing label.
    return tuple.__new__(CuspidalLabel, (label.id, label.rank, label.id + _RAW_DUAL))


def _unlift_factory(originals: dict[str, CuspidalLabel]):
    def unlift_label(lab: CuspidalLabel) -> CuspidalLabel:
        if lab.id.endswith(_RAW_DUAL):
            return dual_label(originals[lab.id[: -len(_RAW_DUAL)]])
        return originals[lab.id]

    def unlift_gl(x: GLClass) -> GLClass:
        return _glclass([_seg(unlift_label(s.label), s.a, s.b) for s in x])

    def unlift_term(k):
        u, v = k
        return (unlift_gl(u), tuple.__new__(SpClass, (unlift_gl(v.gl_part), v.sp_label)))

    return unlift_term


def raw_mu_star(x: SpClass) -> tuple[FormalSum, callable]:
    """mu*(x) computed with every contragredient kept formally distinct.

    Returns the raw sum and the map sending a raw term to its actual
    (merged) basis element.
    """
    originals = {s.label.id: s.label for s in x.gl_part}
    lifted = SpClass(_glclass([_seg(_lift(s.label), s.a, s.b) for s in x.gl_part]),
                     x.sp_label)
    return mu_star(lifted), _unlift_factory(originals)


@dataclass(frozen=True)
class DistinctnessResult:
    ok: bool
    counterexample: tuple | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok


def check_distinctness(x: SpClass) -> DistinctnessResult:
    """Raw constituents of every Jacquet module of ``x`` are distinct and irreducible."""
    _require_mirr(x)
    raw, unlift = raw_mu_star(x)
    for k, v in raw.items():
        if v > 1:
            return DistinctnessResult(False, unlift(k), f"raw term repeated {v} times")
    for k in raw:
        actual = unlift(k)
        if not is_irreducible_gl(actual[0]):
            return DistinctnessResult(False, actual, "GL factor is reducible")
        if not is_irreducible_gl(actual[1].gl_part):
            return DistinctnessResult(False, actual, "GL part of the Sp factor is reducible")
    return DistinctnessResult(True)
