import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spjacquet import (
    UNIT,
    FormalSum,
    GLClass,
    SpClass,
    comult_gl,
    gl_label,
    jacquet_sp,
    mu_star,
    sp_label,
)
from spjacquet.core import GL_GL_GL, GL_SP
from spjacquet.hopf import dual_tensor_comult, swap
from spjacquet.parsing import (
    DeclarationError,
    ParseError,
    SessionDeclarations,
    parse_declarations,
    parse_expression,
)
from spjacquet.render import from_json, render, render_text, to_json, to_json_obj

from helpers import ROUNDTRIP_DECLS, Z, gl, random_element, sp

DECLS = parse_declarations("rho : GL(1)\nrho1 : GL(1)\nrho2: GL(1)\nsigma : Sp(1)")


def test_parse_segment_rank():
    x = parse_expression("Z[0,1]@rho |x sigma", DECLS)
    assert isinstance(x, SpClass) and x.sp_rank == 3
    assert x == sp(sp_label("sigma"), Z(gl_label("rho"), 0, 1))


def test_parse_g3_input():
    x = parse_expression("rho1 x rho2 |x sigma", DECLS)
    assert x == sp(sp_label("sigma"), Z(gl_label("rho1")), Z(gl_label("rho2")))
    assert parse_expression("rho2 x rho1 |x sigma", DECLS) == x


def test_parse_rejects_reversed_segment():
    with pytest.raises(ParseError) as err:
        parse_expression("Z[2,1]@rho", DECLS)
    assert "a > b" in str(err.value) and err.value.pos == 4


@pytest.mark.parametrize("text", [
    "Z[0,1]@nu", "rho x", "rho |x tau", "rho |x", "Z[0 1]@rho", "rho rho", "x", "sigma x rho",
    "rho |x sigma extra", "Z[0,1]rho",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_expression(text, DECLS)


def test_parse_unknown_label_names_it():
    with pytest.raises(ParseError, match="unknown GL label 'nu'"):
        parse_expression("rho x nu", DECLS)


def test_parse_misc_forms():
    rho = gl_label("rho")
    sigma = sp_label("sigma")
    assert parse_expression("1", DECLS) == UNIT
    assert parse_expression("1 |x sigma", DECLS) == SpClass(UNIT, sigma)
    assert parse_expression("sigma", DECLS) == SpClass(UNIT, sigma)
    assert parse_expression("  Z[ -2 , -1 ]@~rho x rho  ", DECLS) == gl(Z(rho.dual, -2, -1), Z(rho))
    assert parse_expression("~~rho", DECLS) == gl(Z(rho))


def test_declarations():
    d = parse_declarations("# comment\nrho : GL(1) self-dual\npi : GL(2) dual eta; eta : GL(2)\nsigma : Sp(0)")
    assert d.gl_labels["rho"].self_dual
    assert d.gl_labels["pi"].dual_id == "eta" and d.gl_labels["eta"].dual_id == "pi"
    assert d.lookup_gl("~pi") == d.gl_labels["eta"]
    assert d.sp_labels["sigma"].rank == 0
    generic = parse_declarations("rho : GL(1)")
    assert generic.lookup_gl("~rho") == gl_label("rho").dual


@pytest.mark.parametrize("text", [
    "rho : GL(1); rho : GL(1)",
    "rho : GL(0)",
    "rho : GL(1) dual a; a : GL(1) dual b",
    "pi : GL(2) dual eta; eta : GL(1)",
    "sigma : Sp(1) self-dual",
    "rho : GL(1) dual sigma; sigma : Sp(1)",
    "rho = GL(1)",
])
def test_declaration_errors(text):
    with pytest.raises(DeclarationError):
        parse_declarations(text)


def test_implicit_declarations():
    d = SessionDeclarations.implicit("Z[0,1]@a x b |x s")
    assert set(d.gl_labels) == {"a", "b"} and set(d.sp_labels) == {"s"}
    assert not d.gl_labels["a"].self_dual


def test_render_examples():
    rho, sigma = gl_label("rho"), sp_label("sigma")
    assert render_text(jacquet_sp(sp(sigma, Z(rho)), 1)) == "~rho (x) sigma + rho (x) sigma"
    assert render_text(UNIT) == "1"
    assert render_text(jacquet_sp(sp(sigma, Z(rho)), 2)) == "0"
    assert render(FormalSum(GL_SP)) == "0"
    assert render_text(gl(Z(rho, 0, 1), Z(rho.dual))) == "~rho x Z[0,1]@rho"
    assert render_text(FormalSum(GL_SP, {(UNIT, sp(sigma, Z(rho))): 3})) == "3*1 (x) (rho |x sigma)"
    t = dual_tensor_comult(swap(comult_gl(gl(Z(rho)))))
    assert t.kind == GL_GL_GL
    assert render_text(t) == "1 (x) 1 (x) rho + 1 (x) rho (x) 1 + ~rho (x) 1 (x) 1"
    with pytest.raises(ValueError):
        render(UNIT, "xml")


def test_render_sorted_by_rank():
    rho1, rho2, sigma = gl_label("rho1"), gl_label("rho2"), sp_label("sigma")
    text = render_text(mu_star(sp(sigma, Z(rho1), Z(rho2))))
    ranks = [len(term.split(" (x) ")[0].split(" x ")) if not term.startswith("1 (x)") else 0
             for term in text.split(" + ")]
    assert ranks == sorted(ranks) and len(ranks) == 9


def test_json_schema():
    rho, sigma = gl_label("rho"), sp_label("sigma")
    obj = json.loads(to_json(jacquet_sp(sp(sigma, Z(rho)), 1)))
    assert obj["kind"] == "formal_sum" and obj["basis"] == "gl⊗sp"
    assert [t["mult"] for t in obj["terms"]] == [1, 1]
    assert set(obj["terms"][0]) == {"left", "right", "mult"}
    assert obj["terms"][0]["right"] == {"type": "sp", "gl": {"type": "gl", "segments": []},
                                         "sp_label": {"id": "sigma", "rank": 1}}
    assert to_json(UNIT) == '{"segments": [], "type": "gl"}'


def test_json_round_trip_sums():
    rho1, rho2, sigma = gl_label("rho1"), gl_label("rho2", 2, self_dual=True), sp_label("sigma")
    x = sp(sigma, Z(rho1, 0, 1), Z(rho2, -1))
    for t in (mu_star(x), comult_gl(x.gl_part), dual_tensor_comult(comult_gl(x.gl_part)),
              FormalSum(GL_SP)):
        assert from_json(to_json(t)) == t
    pair = (gl(Z(rho1)), x)
    assert from_json(to_json(pair)) == pair
    assert to_json_obj(pair)["type"] == "tensor"


_RT = parse_declarations(ROUNDTRIP_DECLS)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_parse_render_fixed_point(seed):
    x = random_element(random.Random(seed), _RT)
    text = render_text(x)
    assert parse_expression(text, _RT) == x
    assert render_text(parse_expression(text, _RT)) == text
    assert from_json(to_json(x)) == x
