"""Domain types: cuspidal labels, segments, GL/Sp basis classes and formal sums.

Everything here is an immutable value.  Segments and classes are tuple
subclasses so that hashing and ordering stay at C speed inside the
enumeration loops of :mod:`spjacquet.hopf` and :mod:`spjacquet.analysis`.
"""

from __future__ import annotations

from collections import namedtuple
from typing import Iterable, Iterator, Mapping

__all__ = [
    "CuspidalLabel",
    "SpCuspidalLabel",
    "Segment",
    "GLClass",
    "SpClass",
    "FormalSum",
    "gl_label",
    "sp_label",
    "dual_label",
    "canonicalize",
    "gl_rank",
    "sp_rank",
    "add",
    "UNIT",
    "KINDS",
    "basis_kind",
    "term_rank",
    "grading_defects",
]

DUAL_PREFIX = "~"


class CuspidalLabel(namedtuple("CuspidalLabel", "id rank dual_id")):
    """Formal supercuspidal representation of ``GL_rank``.

    Labels compare by value; the contragredient is recovered from
    ``dual_id`` alone, so no global registry is needed.
    """

    __slots__ = ()

    def __new__(cls, id: str, rank: int = 1, dual_id: str | None = None):
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"GL cuspidal rank must be a positive integer, got {rank!r}")
        if not id:
            raise ValueError("label id must be non-empty")
        if dual_id is None:
            dual_id = _default_dual_id(id)
        return super().__new__(cls, id, rank, dual_id)

    @property
    def self_dual(self) -> bool:
        return self.id == self.dual_id

    @property
    def dual(self) -> CuspidalLabel:
        return dual_label(self)

    def __repr__(self):
        if self.self_dual:
            return f"CuspidalLabel({self.id!r}, {self.rank}, self-dual)"
        return f"CuspidalLabel({self.id!r}, {self.rank}, dual={self.dual_id!r})"


class SpCuspidalLabel(namedtuple("SpCuspidalLabel", "id rank")):
    """Formal supercuspidal representation of ``Sp_{2k}``; rank 0 is the trivial group."""

    __slots__ = ()

    def __new__(cls, id: str, rank: int = 1):
        if not isinstance(rank, int) or rank < 0:
            raise ValueError(f"Sp cuspidal rank must be a nonnegative integer, got {rank!r}")
        return super().__new__(cls, id, rank)


def _default_dual_id(id: str) -> str:
    if id.startswith(DUAL_PREFIX):
        return id[len(DUAL_PREFIX):]
    return DUAL_PREFIX + id


def gl_label(id: str, rank: int = 1, *, self_dual: bool = False,
             dual: str | None = None) -> CuspidalLabel:
    """Build a GL label.

    Without ``self_dual`` or ``dual`` the contragredient is a distinct
    partner named ``"~" + id``.
    """
    if self_dual and dual is not None and dual != id:
        raise ValueError(f"label {id!r} cannot be self-dual and dual to {dual!r}")
    if self_dual:
        return CuspidalLabel(id, rank, id)
    return CuspidalLabel(id, rank, dual)


def sp_label(id: str, rank: int = 1) -> SpCuspidalLabel:
    return SpCuspidalLabel(id, rank)


def dual_label(label: CuspidalLabel) -> CuspidalLabel:
    if label.id == label.dual_id:
        return label
    return tuple.__new__(CuspidalLabel, (label.dual_id, label.rank, label.id))


class Segment(namedtuple("Segment", "label a b")):
    """The segment ``[nu^a rho, nu^b rho]`` with integer exponents ``a <= b``."""

    __slots__ = ()

    def __new__(cls, label: CuspidalLabel, a: int, b: int):
        if not isinstance(label, CuspidalLabel):
            raise TypeError(f"segment label must be a CuspidalLabel, got {type(label).__name__}")
        if not (isinstance(a, int) and isinstance(b, int)):
            raise TypeError("segment exponents must be integers")
        if a > b:
            raise ValueError(f"segment exponents must satisfy a <= b, got [{a},{b}]")
        return super().__new__(cls, label, a, b)

    @property
    def length(self) -> int:
        return self.b - self.a + 1

    @property
    def gl_rank(self) -> int:
        return self.label.rank * (self.b - self.a + 1)

    def __repr__(self):
        return f"[{self.a},{self.b}]@{self.label.id}"


def _seg(label, a, b):
    # Unchecked constructor for hot loops; callers guarantee a <= b.
    return tuple.__new__(Segment, (label, a, b))


class GLClass(tuple):
    """Canonical multiset of segments: the basis element Z(D1) x ... x Z(Dr).

    The empty class is the unit ``1``.  Construction sorts, so equal
    multisets give equal (and equally hashed) values.
    """

    __slots__ = ()

    def __new__(cls, segments: Iterable[Segment] = ()):
        segs = sorted(segments)
        for s in segs:
            if not isinstance(s, Segment):
                raise TypeError(f"GLClass holds Segments, got {type(s).__name__}")
        return tuple.__new__(cls, segs)

    @property
    def segments(self) -> tuple[Segment, ...]:
        return tuple(self)

    @property
    def gl_rank(self) -> int:
        return sum(s.label.rank * (s.b - s.a + 1) for s in self)

    def __mul__(self, other):
        if isinstance(other, GLClass):
            return _glclass(list(self) + list(other))
        return NotImplemented

    def __add__(self, other):
        # tuple concatenation would silently break canonical form
        return NotImplemented

    def __repr__(self):
        if not self:
            return "GLClass(1)"
        return "GLClass(" + " x ".join(repr(s) for s in self) + ")"


def _glclass(segments: list) -> GLClass:
    segments.sort()
    return tuple.__new__(GLClass, segments)


UNIT = tuple.__new__(GLClass, ())


class SpClass(namedtuple("SpClass", "gl_part sp_label")):
    """The induced class ``pi |x sigma`` with ``pi`` a GLClass."""

    __slots__ = ()

    def __new__(cls, gl_part: GLClass, sp_label: SpCuspidalLabel):
        if not isinstance(gl_part, GLClass):
            gl_part = GLClass(gl_part)
        if not isinstance(sp_label, SpCuspidalLabel):
            raise TypeError("sp_label must be an SpCuspidalLabel")
        return super().__new__(cls, gl_part, sp_label)

    @property
    def sp_rank(self) -> int:
        return self.gl_part.gl_rank + self.sp_label.rank

    def __repr__(self):
        return f"SpClass({self.gl_part!r} |x {self.sp_label.id})"


def canonicalize(segments: Iterable[Segment]) -> GLClass:
    """Sorted multiset normal form of a product of segment representations."""
    return GLClass(segments)


def gl_rank(x: GLClass) -> int:
    return x.gl_rank


def sp_rank(x: SpClass) -> int:
    return x.sp_rank


# Basis kinds of a FormalSum.
GL = "gl"
SP = "sp"
GL_GL = "gl⊗gl"
GL_SP = "gl⊗sp"
GL_GL_GL = "gl⊗gl⊗gl"
KINDS = (GL, SP, GL_GL, GL_SP, GL_GL_GL)


def basis_kind(element) -> str:
    """Kind tag of a basis element (class, pair or triple)."""
    if isinstance(element, SpClass):
        return SP
    if isinstance(element, GLClass):
        return GL
    if isinstance(element, tuple):
        if len(element) == 2 and isinstance(element[0], GLClass):
            if isinstance(element[1], SpClass):
                return GL_SP
            if isinstance(element[1], GLClass):
                return GL_GL
        if len(element) == 3 and all(isinstance(e, GLClass) for e in element):
            return GL_GL_GL
    raise TypeError(f"not a basis element: {element!r}")


def term_rank(element) -> int:
    """Total rank of a basis element (sum over tensor factors)."""
    if isinstance(element, SpClass):
        return element.sp_rank
    if isinstance(element, GLClass):
        return element.gl_rank
    return sum(term_rank(e) for e in element)


class FormalSum:
    """Element of a Grothendieck group with nonnegative integer coefficients.

    ``terms`` maps basis elements of one kind to multiplicities; zero
    entries are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("kind", "_terms", "_hash")

    def __init__(self, kind: str, terms: Mapping | Iterable = ()):
        if kind not in KINDS:
            raise ValueError(f"unknown basis kind {kind!r}")
        self.kind = kind
        data: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for element, mult in items:
            if not isinstance(mult, int) or mult < 0:
                raise ValueError(f"multiplicities must be nonnegative integers, got {mult!r}")
            if basis_kind(element) != kind:
                raise TypeError(f"basis element {element!r} is not of kind {kind}")
            if mult:
                data[element] = data.get(element, 0) + mult
        self._terms = data
        self._hash = None

    @classmethod
    def _trusted(cls, kind: str, data: dict) -> FormalSum:
        # For internally accumulated dicts with positive values only.
        out = object.__new__(cls)
        out.kind = kind
        out._terms = data
        out._hash = None
        return out

    @classmethod
    def zero(cls, kind: str) -> FormalSum:
        return cls(kind)

    @classmethod
    def of(cls, element, mult: int = 1) -> FormalSum:
        return cls(basis_kind(element), {element: mult})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, element):
        return element in self._terms

    def __getitem__(self, element) -> int:
        return self._terms.get(element, 0)

    def total(self) -> int:
        """Sum of all multiplicities (number of constituents with repetition)."""
        return sum(self._terms.values())

    def __add__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        if other.kind != self.kind:
            raise TypeError(f"cannot add sums of kind {self.kind} and {other.kind}")
        data = dict(self._terms)
        for k, v in other._terms.items():
            data[k] = data.get(k, 0) + v
        return FormalSum._trusted(self.kind, data)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("only nonnegative scalars are allowed")
        if n == 0:
            return FormalSum(self.kind)
        return FormalSum._trusted(self.kind, {k: v * n for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.kind == other.kind and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.kind, frozenset(self._terms.items())))
        return self._hash

    def filter(self, predicate) -> FormalSum:
        return FormalSum._trusted(
            self.kind, {k: v for k, v in self._terms.items() if predicate(k)})

    def map_terms(self, fn, kind: str | None = None) -> FormalSum:
        """Apply ``fn`` to every basis element, merging coincident images."""
        data: dict = {}
        for k, v in self._terms.items():
            image = fn(k)
            data[image] = data.get(image, 0) + v
        return FormalSum._trusted(kind or self.kind, data)

    def __repr__(self):
        if not self._terms:
            return f"FormalSum({self.kind}, 0)"
        body = ", ".join(f"{k!r}: {v}" for k, v in self._terms.items())
        return f"FormalSum({self.kind}, {{{body}}})"


def add(x: FormalSum, y: FormalSum) -> FormalSum:
    return x + y


def grading_defects(t: FormalSum, rank: int) -> list:
    """Terms of ``t`` whose factor ranks do not add up to ``rank``."""
    return [k for k in t if term_rank(k) != rank]
