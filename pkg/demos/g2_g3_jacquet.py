# coding: utf-8

# # Jacquet modules of small induced representations
#
# Supercuspidals are just labels here. A generic rank-1 label `rho` has a
# distinct contragredient `~rho`; the symplectic supercuspidal is `sigma`.

# In[1]:

from spjacquet import SpClass, GLClass, Segment, gl_label, sp_label
from spjacquet import jacquet_sp, mu_star, M_star, multiplicity_table
from spjacquet.render import render_text

rho = gl_label("rho")
sigma = sp_label("sigma", 1)


# ## rho |x sigma on Sp_4
#
# The coaction has three terms. The Levi GL_1 x Sp_2 sees two of them,
# and nothing survives for GL_2.

# In[2]:

g2 = SpClass(GLClass([Segment(rho, 0, 0)]), sigma)
print("mu*  :", render_text(mu_star(g2)))
for l in range(g2.sp_rank + 1):
    print(f"r_({l}) :", render_text(jacquet_sp(g2, l)))


# When `rho` is self-dual the two Levi-1 constituents coincide:

# In[3]:

rho_sd = gl_label("rho", self_dual=True)
rep = multiplicity_table(SpClass(GLClass([Segment(rho_sd, 0, 0)]), sigma), 1)
print(render_text(rep.table), "  max multiplicity", rep.max_multiplicity)


# ## rho1 x rho2 |x sigma on Sp_6

# In[4]:

rho1, rho2 = gl_label("rho1"), gl_label("rho2")
g3 = SpClass(GLClass([Segment(rho1, 0, 0), Segment(rho2, 0, 0)]), sigma)
print(len(mu_star(g3)), "terms in mu*")
for l in range(1, 4):
    print(f"r_({l}) :", render_text(jacquet_sp(g3, l)))


# M* is what feeds the coaction; the nine terms above are M*(rho1 x rho2)
# with sigma attached on the right.

# In[5]:

print(render_text(M_star(g3.gl_part)))
