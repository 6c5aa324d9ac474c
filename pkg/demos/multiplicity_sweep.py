# coding: utf-8

# # How large can a Jacquet-module multiplicity get?
#
# Sweep every pairwise unlinked, non-nested product of segments over
# sigma and record the largest coefficient in each Levi piece.

# In[1]:

import time

from spjacquet import GLClass, Segment, SpClass, check_theorem_main, gl_label, sp_label
from spjacquet import multiplicity_table
from spjacquet.render import render_text


# A single self-dual line is enough to see coefficients of 2 on factors
# that are not self-dual.

# In[2]:

rho = gl_label("rho", self_dual=True)
sigma = sp_label("sigma")
x = SpClass(GLClass([Segment(rho, 0, 0), Segment(rho, 2, 2)]), sigma)
rep = multiplicity_table(x, 2)
print(render_text(rep.table))


# Three points on the line push it to 4.

# In[3]:

y = SpClass(GLClass([Segment(rho, a, a) for a in (-2, 0, 2)]), sigma)
print(multiplicity_table(y, 3).max_multiplicity)


# The default sweep: `rho` self-dual, `pi` of rank 2 generic, exponents in
# [-2, 2], at most three segments.

# In[4]:

start = time.perf_counter()
res = check_theorem_main()
print(f"{res.instances} instances, {res.reports} Levi reports in {time.perf_counter() - start:.1f}s")
print("max multiplicity:", res.max_multiplicity)
print(res.counts())
worst = max(res.violations, key=lambda v: v.multiplicity)
print("worst:", render_text(worst.input), " l =", worst.levi_rank)


# With two generic lines and no contragredient lines the bound 1 holds.

# In[5]:

generic = check_theorem_main([gl_label("rho1"), gl_label("rho2")], [sigma], -2, 2, 2,
                             dual_lines=False)
print(generic.instances, generic.max_multiplicity, generic.counts())
