# coding: utf-8

# # Two ways to compute m*
#
# `comult_gl` multiplies the comultiplications of single segments.
# `jacquet_gl_direct` walks every cut vector instead. They share no code
# beyond the data types, so agreement is a real check.

# In[1]:

import itertools
import time

from spjacquet import GLClass, Segment, comult_gl, gl_label, graded_piece, jacquet_gl_direct
from spjacquet.render import render_text

rho, pi = gl_label("rho"), gl_label("pi", 2)
segs = [Segment(lab, a, b) for lab in (rho, pi) for a in range(-2, 3) for b in range(a, 3)]
print(len(segs), "segments")


# In[2]:

x = GLClass([Segment(rho, 0, 1), Segment(rho, 3, 4)])
for q in range(x.gl_rank + 1):
    print(q, render_text(jacquet_gl_direct(x, q)))


# Now every multiset of at most three segments.

# In[3]:

start = time.perf_counter()
classes = pieces = 0
for k in range(4):
    for combo in itertools.combinations_with_replacement(segs, k):
        x = GLClass(combo)
        full = comult_gl(x)
        for q in range(x.gl_rank + 1):
            assert graded_piece(full, q) == jacquet_gl_direct(x, q)
            pieces += 1
        classes += 1
print(f"{classes} classes, {pieces} graded pieces agree ({time.perf_counter() - start:.1f}s)")
