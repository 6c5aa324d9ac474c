import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spjacquet import (
    UNIT,
    CuspidalLabel,
    FormalSum,
    GLClass,
    Segment,
    SpClass,
    add,
    canonicalize,
    dual_label,
    gl_label,
    gl_rank,
    sp_label,
    sp_rank,
)
from spjacquet.core import GL_GL, GL_SP, basis_kind, grading_defects

from helpers import Z, gl, sp


def test_label_invariants():
    rho = gl_label("rho", 2)
    assert not rho.self_dual
    assert rho.dual_id == "~rho"
    assert dual_label(rho).rank == 2
    assert dual_label(dual_label(rho)) == rho
    sd = gl_label("chi", self_dual=True)
    assert sd.self_dual and dual_label(sd) == sd
    with pytest.raises(ValueError):
        gl_label("bad", 0)
    with pytest.raises(ValueError):
        sp_label("s", -1)
    assert sp_label("triv", 0).rank == 0


def test_declared_partner():
    a = gl_label("a", 1, dual="b")
    assert dual_label(a) == CuspidalLabel("b", 1, "a")


def test_segment_invariants(rho):
    s = Segment(rho, -1, 2)
    assert s.length == 4
    assert s.gl_rank == 4
    assert Segment(gl_label("pi", 2), 0, 2).gl_rank == 6
    with pytest.raises(ValueError):
        Segment(rho, 2, 1)
    with pytest.raises(TypeError):
        Segment(rho, 0.5, 1)


def test_canonicalize_examples():
    r1, r2 = gl_label("rho1"), gl_label("rho2")
    x = canonicalize([Z(r2, 1, 2), Z(r1, 0, 1)])
    assert list(x) == [Z(r1, 0, 1), Z(r2, 1, 2)]
    assert canonicalize([]) == UNIT and gl_rank(canonicalize([])) == 0
    twice = canonicalize([Z(r1), Z(r1)])
    assert list(twice) == [Z(r1), Z(r1)]
    assert twice != canonicalize([Z(r1)])


def test_ranks(rho, sigma):
    assert gl_rank(gl(Z(gl_label("rho", 2), 0, 2))) == 6
    assert gl_rank(UNIT) == 0
    r1, r2 = gl_label("rho1"), gl_label("rho2")
    assert sp_rank(sp(sigma, Z(r1), Z(r2))) == 3
    assert sp_rank(SpClass(UNIT, sp_label("triv", 0))) == 0


def test_add_examples(rho, sigma):
    t1 = FormalSum.of((gl(Z(rho)), SpClass(UNIT, sigma)))
    t2 = FormalSum.of((gl(Z(dual_label(rho))), SpClass(UNIT, sigma)))
    s = add(t1, t2)
    assert s.terms == {k: 1 for k in list(t1) + list(t2)}
    assert add(t1, FormalSum(GL_SP)) == t1
    assert (t1 + t1)[next(iter(t1))] == 2
    with pytest.raises(TypeError):
        t1 + FormalSum(GL_GL)


def test_formal_sum_rejects_negative_and_drops_zero(rho):
    with pytest.raises(ValueError):
        FormalSum("gl", {gl(Z(rho)): -1})
    assert len(FormalSum("gl", {gl(Z(rho)): 0})) == 0
    with pytest.raises(TypeError):
        FormalSum("gl", {(UNIT, UNIT): 1})
    assert 0 * FormalSum.of(gl(Z(rho))) == FormalSum("gl")
    with pytest.raises(ValueError):
        FormalSum.of(gl(Z(rho))) * -2


def test_basis_kind(rho, sigma):
    x = gl(Z(rho))
    assert basis_kind(x) == "gl"
    assert basis_kind(SpClass(x, sigma)) == "sp"
    assert basis_kind((x, x)) == "gl⊗gl"
    assert basis_kind((x, SpClass(x, sigma))) == "gl⊗sp"
    assert basis_kind((x, x, x)) == "gl⊗gl⊗gl"


def test_grading_defects(rho):
    t = FormalSum(GL_GL, {(gl(Z(rho)), UNIT): 1, (UNIT, gl(Z(rho, 0, 1))): 1})
    assert grading_defects(t, 1) == [(UNIT, gl(Z(rho, 0, 1)))]


LABELS = [gl_label("r", 1), gl_label("s", 2), gl_label("t", 1, self_dual=True)]
segments = st.builds(
    lambda lab, a, n: Segment(lab, a, a + n),
    st.sampled_from(LABELS), st.integers(-3, 3), st.integers(0, 3))


@given(st.lists(segments, max_size=5), st.randoms())
def test_canonicalize_idempotent_and_permutation_invariant(segs, rnd):
    x = canonicalize(segs)
    assert canonicalize(list(x)) == x
    shuffled = list(segs)
    rnd.shuffle(shuffled)
    assert canonicalize(shuffled) == x
    assert hash(canonicalize(shuffled)) == hash(x)


elements = st.lists(segments, max_size=2).map(GLClass)
sums = st.dictionaries(elements, st.integers(0, 3), max_size=4).map(
    lambda d: FormalSum("gl", d))


@given(sums, sums, sums)
def test_formal_sum_is_commutative_monoid(x, y, z):
    zero = FormalSum("gl")
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x + zero == x
    assert 2 * x == x + x
    assert all(v > 0 for _, v in (x + y).items())


def test_duality_registry_is_rank_preserving_involution():
    rnd = random.Random(7)
    for _ in range(200):
        lab = gl_label(f"l{rnd.randrange(50)}", rnd.randint(1, 4),
                       self_dual=rnd.random() < 0.3)
        assert dual_label(dual_label(lab)) == lab
        assert dual_label(lab).rank == lab.rank
        assert (dual_label(lab) == lab) == lab.self_dual
