"""Brute-force reference computations, deliberately independent of spjacquet.hopf.

They work on plain ``(label_id, rank, dual_id, a, b)`` tuples and sorted
tuples of those, so no library canonicalization or cut enumeration is reused.
"""

from itertools import product


def seg_tuple(s):
    return (s.label.id, s.label.rank, s.label.dual_id, s.a, s.b)


def linked_by_sets(d1, d2):
    """Linkedness from the definition using explicit exponent sets."""
    if d1.label != d2.label:
        return False
    s1 = set(range(d1.a, d1.b + 1))
    s2 = set(range(d2.a, d2.b + 1))
    if s1 <= s2 or s2 <= s1:
        return False
    u = s1 | s2
    return u == set(range(min(u), max(u) + 1))


def _piece(t, lo, hi):
    return None if lo > hi else (t[0], t[1], t[2], lo, hi)


def _dual(t):
    return (t[2], t[1], t[0], -t[4], -t[3])


def _multiset(pieces):
    return tuple(sorted(p for p in pieces if p is not None))


def _rank(ms):
    return sum(t[1] * (t[4] - t[3] + 1) for t in ms)


def jacquet_gl_bruteforce(segments, q):
    """Graded piece of m* over the full product of cut points, filtered by rank."""
    ts = [seg_tuple(s) for s in segments]
    out = {}
    for cuts in product(*[range(t[3], t[4] + 2) for t in ts]):
        left = _multiset(_piece(t, t[3], p - 1) for t, p in zip(ts, cuts))
        right = _multiset(_piece(t, p, t[4]) for t, p in zip(ts, cuts))
        if _rank(left) == q:
            out[(left, right)] = out.get((left, right), 0) + 1
    return out


def mstar_bruteforce(segments):
    """M* via the three-piece split of every segment.

    Segment [a, b] splits as [a, u-1] | [u, p-1] | [p, b]; the first piece
    and the contragredient of the last go left, the middle goes right.
    """
    ts = [seg_tuple(s) for s in segments]
    choices = []
    for t in ts:
        a, b = t[3], t[4]
        choices.append([(u, p) for p in range(a, b + 2) for u in range(a, p + 1)])
    out = {}
    for pick in product(*choices):
        left, right = [], []
        for t, (u, p) in zip(ts, pick):
            left.append(_piece(t, t[3], u - 1))
            d = _piece(t, p, t[4])
            left.append(None if d is None else _dual(d))
            right.append(_piece(t, u, p - 1))
        key = (_multiset(left), _multiset(right))
        out[key] = out.get(key, 0) + 1
    return out


def as_plain(t):
    """Convert a library sum over GL pairs to the oracle's plain-tuple form."""
    return {tuple(tuple(sorted(seg_tuple(s) for s in f)) for f in k): v for k, v in t.items()}
