"""Label declarations and the expression grammar.

Grammar (whitespace-insensitive)::

    rep     := glrep ( "|x" spname )?  |  spname
    glrep   := "1" | factor ( "x" factor )*
    factor  := "Z[" int "," int "]@" glname | glname
    glname  := "~"* IDENT

A bare ``glname`` stands for ``Z[0,0]@glname`` and each leading ``~``
takes the contragredient label.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import (
    CuspidalLabel,
    GLClass,
    Segment,
    SpClass,
    SpCuspidalLabel,
    dual_label,
)

__all__ = [
    "ParseError",
    "DeclarationError",
    "SessionDeclarations",
    "parse_declarations",
    "parse_expression",
]


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
            if text:
                message += f"\n  {text}\n  {' ' * pos}^"
        super().__init__(message)


class DeclarationError(ValueError):
    pass


_DECL_RE = re.compile(
    r"""^\s*(?P<name>[A-Za-z_][\w']*)\s*:\s*
        (?P<group>GL|Sp)\s*\(\s*(?P<rank>\d+)\s*\)\s*
        (?:(?P<self>self-dual)|dual\s+(?P<partner>[A-Za-z_][\w']*))?\s*$""",
    re.VERBOSE,
)


@dataclass
class SessionDeclarations:
    """Named GL and Sp labels available to the parser."""

    gl_labels: dict[str, CuspidalLabel] = field(default_factory=dict)
    sp_labels: dict[str, SpCuspidalLabel] = field(default_factory=dict)

    @classmethod
    def from_specs(cls, gl: list[tuple], sp: list[tuple]) -> SessionDeclarations:
        """Build from ``(name, rank, duality)`` and ``(name, rank)`` tuples.

        ``duality`` is ``None`` (generic), ``"self"`` or a partner name.
        """
        names = [g[0] for g in gl] + [s[0] for s in sp]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise DeclarationError(f"duplicate label names: {', '.join(dupes)}")
        ranks = {name: rank for name, rank, _ in gl}
        partner: dict[str, str] = {}
        for name, rank, duality in gl:
            if duality is None:
                continue
            other = name if duality == "self" else duality
            if other in dict(sp):
                raise DeclarationError(f"{name}: dual partner {other} is an Sp label")
            for a, b in ((name, other), (other, name)):
                if partner.get(a, b) != b:
                    raise DeclarationError(
                        f"inconsistent duality: {a} is dual to both {partner[a]} and {b}")
                partner[a] = b
            if other in ranks and ranks[other] != rank:
                raise DeclarationError(
                    f"{name} has rank {rank} but its dual {other} has rank {ranks[other]}")
        decls = cls()
        for name, rank, _ in gl:
            decls.gl_labels[name] = CuspidalLabel(name, rank, partner.get(name))
        for name, rank in sp:
            decls.sp_labels[name] = SpCuspidalLabel(name, rank)
        return decls

    @classmethod
    def implicit(cls, text: str) -> SessionDeclarations:
        """Declare every name in ``text``: GL(1) generic before ``|x``, Sp(1) after."""
        head, sep, tail = text.partition("|x")
        gl_names = []
        for m in re.finditer(r"[A-Za-z_][\w']*", head):
            name = m.group()
            if name in ("x", "Z") or name in gl_names:
                continue
            gl_names.append(name)
        sp = [(n, 1) for n in re.findall(r"[A-Za-z_][\w']*", tail)][:1] if sep else []
        return cls.from_specs([(n, 1, None) for n in gl_names], sp)

    def lookup_gl(self, name: str) -> CuspidalLabel | None:
        tildes = len(name) - len(name.lstrip("~"))
        base = name[tildes:]
        label = self.gl_labels.get(base)
        if label is None:
            # auto-created partners are addressable by their own id
            for lab in self.gl_labels.values():
                if lab.dual_id == base:
                    label = dual_label(lab)
                    break
        if label is None:
            return None
        for _ in range(tildes):
            label = dual_label(label)
        return label

    def all_gl(self) -> list[CuspidalLabel]:
        return list(self.gl_labels.values())

    def all_sp(self) -> list[SpCuspidalLabel]:
        return list(self.sp_labels.values())


def parse_declarations(text: str) -> SessionDeclarations:
    """Parse ``name : GL(k) [self-dual | dual other]`` / ``name : Sp(k)`` lines.

    Declarations are separated by newlines or ``;``; ``#`` starts a comment.
    """
    gl, sp = [], []
    for raw in re.split(r"[;\n]", text):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _DECL_RE.match(line)
        if not m:
            raise DeclarationError(f"cannot parse declaration {line!r}")
        rank = int(m.group("rank"))
        if m.group("group") == "Sp":
            if m.group("self") or m.group("partner"):
                raise DeclarationError(f"{m.group('name')}: Sp labels carry no duality")
            sp.append((m.group("name"), rank))
        else:
            if rank < 1:
                raise DeclarationError(f"{m.group('name')}: GL rank must be positive")
            duality = "self" if m.group("self") else m.group("partner")
            gl.append((m.group("name"), rank, duality))
    return SessionDeclarations.from_specs(gl, sp)


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<semidirect>\|x)
      | (?P<zopen>Z\s*\[)
      | (?P<int>[+-]?\d+)
      | (?P<name>~*[A-Za-z_][\w']*)
      | (?P<punct>[\[\],@~])""",
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "name" and value == "x":
                kind = "times"
            elif kind == "punct":
                kind = value
            tokens.append((kind, value, pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, decls: SessionDeclarations):
        self.text = text
        self.decls = decls
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str, what: str | None = None):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = tok[1] or "end of input"
            raise ParseError(f"expected {what or kind}, found {found!r}", self.text, tok[2])
        self.i += 1
        return tok

    def rep(self):
        kind, value, pos = self.peek()
        if kind == "name" and value in self.decls.sp_labels:
            self.i += 1
            self.take("end", "end of input")
            return SpClass(GLClass(), self.decls.sp_labels[value])
        gl = self.glrep()
        if self.peek()[0] == "semidirect":
            self.i += 1
            _, name, npos = self.take("name", "Sp label name")
            sigma = self.decls.sp_labels.get(name)
            if sigma is None:
                raise ParseError(f"unknown Sp label {name!r}", self.text, npos)
            self.take("end", "end of input")
            return SpClass(gl, sigma)
        self.take("end", "'x', '|x' or end of input")
        return gl

    def glrep(self) -> GLClass:
        kind, value, _ = self.peek()
        if kind == "int" and value == "1":
            self.i += 1
            return GLClass()
        segs = [self.factor()]
        while self.peek()[0] == "times":
            self.i += 1
            segs.append(self.factor())
        return GLClass(segs)

    def factor(self) -> Segment:
        kind, value, pos = self.peek()
        if kind == "zopen":
            self.i += 1
            a = int(self.take("int", "integer")[1])
            self.take(",", "','")
            bpos = self.peek()[2]
            b = int(self.take("int", "integer")[1])
            self.take("]", "']'")
            self.take("@", "'@'")
            label = self.label()
            if a > b:
                raise ParseError(f"segment Z[{a},{b}] has a > b", self.text, bpos)
            return Segment(label, a, b)
        if kind == "name":
            return Segment(self.label(), 0, 0)
        raise ParseError(f"expected a segment or label, found {value or 'end of input'!r}",
                         self.text, pos)

    def label(self) -> CuspidalLabel:
        _, name, pos = self.take("name", "GL label name")
        label = self.decls.lookup_gl(name)
        if label is None:
            if name.lstrip("~") in self.decls.sp_labels:
                raise ParseError(f"{name!r} is an Sp label, expected a GL label", self.text, pos)
            raise ParseError(f"unknown GL label {name!r}", self.text, pos)
        return label


def parse_expression(text: str, decls: SessionDeclarations) -> GLClass | SpClass:
    """Parse a GL product or an induced Sp class; the result is canonical."""
    return _Parser(text, decls).rep()
