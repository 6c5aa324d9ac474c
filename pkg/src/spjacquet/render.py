"""Text and JSON rendering of basis elements, formal sums and reports.

Text uses ``x`` for products, ``|x`` for induction from GL x G, ``(x)`` for
tensor products and a leading ``~`` on auto-created contragredient labels.
"""

from __future__ import annotations

import json

from .core import (
    GL,
    GL_GL,
    GL_GL_GL,
    GL_SP,
    SP,
    CuspidalLabel,
    FormalSum,
    GLClass,
    Segment,
    SpClass,
    SpCuspidalLabel,
    basis_kind,
)

__all__ = [
    "render",
    "render_text",
    "sort_terms",
    "to_json_obj",
    "from_json_obj",
    "to_json",
    "from_json",
]


def _segment_text(s: Segment) -> str:
    if s.a == 0 and s.b == 0:
        return s.label.id
    return f"Z[{s.a},{s.b}]@{s.label.id}"


def _gl_text(x: GLClass) -> str:
    if not x:
        return "1"
    ordered = sorted(x, key=lambda s: (_label_key(s.label.id), s.a, s.b))
    return " x ".join(_segment_text(s) for s in ordered)


def _sp_text(x: SpClass) -> str:
    if not x.gl_part:
        return x.sp_label.id
    return f"{_gl_text(x.gl_part)} |x {x.sp_label.id}"


def _element_text(e) -> str:
    if isinstance(e, SpClass):
        return _sp_text(e)
    if isinstance(e, GLClass):
        return _gl_text(e)
    parts = []
    for f in e:
        text = _element_text(f)
        compound = (len(f) > 1) if isinstance(f, GLClass) else bool(f.gl_part)
        parts.append(f"({text})" if compound else text)
    return " (x) ".join(parts)


def _label_key(label_id: str):
    # Partners sit next to each other, contragredient first.
    base = label_id.lstrip("~")
    return (base, -(len(label_id) - len(base)))


def _gl_key(x: GLClass):
    return tuple(sorted((_label_key(s.label.id), s.a, s.b) for s in x))


def _element_key(e):
    if isinstance(e, SpClass):
        return (_gl_key(e.gl_part), e.sp_label.id)
    if isinstance(e, GLClass):
        return _gl_key(e)
    return tuple(_element_key(f) for f in e)


def _leading_rank(e) -> int:
    if isinstance(e, SpClass):
        return e.sp_rank
    if isinstance(e, GLClass):
        return e.gl_rank
    return e[0].gl_rank


def sort_terms(t: FormalSum) -> list[tuple]:
    """Terms ordered by (rank of first factor, canonical key)."""
    return sorted(t.items(), key=lambda kv: (_leading_rank(kv[0]), _element_key(kv[0])))


def render_text(obj) -> str:
    if isinstance(obj, FormalSum):
        if not obj:
            return "0"
        out = []
        for e, mult in sort_terms(obj):
            text = _element_text(e)
            out.append(text if mult == 1 else f"{mult}*{text}")
        return " + ".join(out)
    return _element_text(obj)


# -- JSON -------------------------------------------------------------------

def _label_obj(label) -> dict:
    if isinstance(label, CuspidalLabel):
        return {"id": label.id, "rank": label.rank, "dual": label.dual_id}
    return {"id": label.id, "rank": label.rank}


def _element_obj(e) -> dict:
    if isinstance(e, SpClass):
        return {"type": SP, "gl": _element_obj(e.gl_part), "sp_label": _label_obj(e.sp_label)}
    if isinstance(e, GLClass):
        return {"type": GL, "segments": [
            {"label": _label_obj(s.label), "a": s.a, "b": s.b} for s in e]}
    raise TypeError(f"not a GL or Sp class: {e!r}")


_SLOTS = {GL: ("element",), SP: ("element",), GL_GL: ("left", "right"),
          GL_SP: ("left", "right"), GL_GL_GL: ("left", "middle", "right")}


def to_json_obj(obj) -> dict:
    if isinstance(obj, FormalSum):
        slots = _SLOTS[obj.kind]
        terms = []
        for e, mult in sort_terms(obj):
            factors = (e,) if len(slots) == 1 else e
            entry = {slot: _element_obj(f) for slot, f in zip(slots, factors)}
            entry["mult"] = mult
            terms.append(entry)
        return {"kind": "formal_sum", "basis": obj.kind, "terms": terms}
    if isinstance(obj, (GLClass, SpClass)):
        return _element_obj(obj)
    if isinstance(obj, tuple):
        basis_kind(obj)
        return {"type": "tensor", "factors": [_element_obj(f) for f in obj]}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _element_from(d: dict):
    if d["type"] == GL:
        return GLClass(
            Segment(CuspidalLabel(s["label"]["id"], s["label"]["rank"], s["label"]["dual"]),
                    s["a"], s["b"])
            for s in d["segments"])
    if d["type"] == SP:
        lab = d["sp_label"]
        return SpClass(_element_from(d["gl"]), SpCuspidalLabel(lab["id"], lab["rank"]))
    if d["type"] == "tensor":
        return tuple(_element_from(f) for f in d["factors"])
    raise ValueError(f"unknown element type {d['type']!r}")


def from_json_obj(d: dict):
    if d.get("kind") == "formal_sum":
        slots = _SLOTS[d["basis"]]
        items = []
        for entry in d["terms"]:
            factors = tuple(_element_from(entry[s]) for s in slots)
            items.append((factors[0] if len(slots) == 1 else factors, entry["mult"]))
        return FormalSum(d["basis"], items)
    return _element_from(d)


def to_json(obj) -> str:
    return json.dumps(to_json_obj(obj), sort_keys=True, ensure_ascii=False)


def from_json(text: str):
    return from_json_obj(json.loads(text))


def render(obj, format: str = "text") -> str:
    if format == "text":
        return render_text(obj)
    if format == "json":
        return to_json(obj)
    raise ValueError(f"unknown format {format!r}")
