"""Short constructors used across the test modules."""

from spjacquet import GLClass, Segment, SpClass


def Z(label, a=0, b=None):
    return Segment(label, a, a if b is None else b)


def gl(*segments):
    return GLClass(segments)


def sp(sigma, *segments):
    return SpClass(GLClass(segments), sigma)


ROUNDTRIP_DECLS = "rho : GL(1); chi : GL(1) self-dual; pi : GL(2); tau : GL(2) dual eta; eta : GL(2); sigma : Sp(1); sigma0 : Sp(0)"


def random_element(rnd, decls):
    """A random canonical GL or Sp class over the declared labels (duals included)."""
    labels = []
    for lab in decls.all_gl():
        labels.append(lab)
        if not lab.self_dual:
            labels.append(lab.dual)
    segs = []
    for _ in range(rnd.randint(0, 4)):
        a = rnd.randint(-4, 4)
        segs.append(Segment(rnd.choice(labels), a, a + rnd.randint(0, 3)))
    x = GLClass(segs)
    if rnd.random() < 0.5:
        return x
    return SpClass(x, rnd.choice(decls.all_sp()))
