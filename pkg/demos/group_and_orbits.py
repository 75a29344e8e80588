# coding: utf-8

# # The nilpotent group G_NC
#
# Elements are written in exponential coordinates: three central parameters
# (theta, phi, psi) and a phase-space translation (q, p). Multiplication is
# the truncated BCH formula, exact for a step-two algebra.

# In[1]:

from fractions import Fraction as F
import random

from ncqm import GroupElement, quotient_project, Functional, SectorLabel
from ncqm import coadjoint_act, orbit_data, connecting_element, decide_equivalence


# In[2]:

g = GroupElement(F(0), F(0), F(0), (F(1), F(0)), (F(0), F(2)))
h = GroupElement(F(1, 2), F(0), F(0), (F(0), F(1)), (F(3), F(0)))
print((g * h).to_dict())
print((g * g.inverse()).to_dict())


# Forgetting theta and phi lands in the Weyl-Heisenberg group, and the
# projection respects products.

# In[3]:

print(quotient_project(g * h) == quotient_project(g) * quotient_project(h))


# # Coadjoint orbits
#
# A functional whose central part is (hbar, theta, hbar*B) with kappa != 0
# sits on a four-dimensional orbit.

# In[4]:

ell = Functional(F(1), F(1, 2), F(1, 3), F(0), F(0), F(0), F(0))
print(orbit_data(ell).to_dict())


# In[5]:

rng = random.Random(7)
moved = coadjoint_act(GroupElement(F(0), F(0), F(0), (F(2), F(-1)), (F(1, 3), F(5))), ell)
x = connecting_element(ell, moved)
print(coadjoint_act(x, ell) == moved)


# # Deciding equivalence of sectors
#
# Two generic regular sectors are equivalent only when their labels agree.

# In[6]:

a = SectorLabel(F(1), F(1, 2), F(1, 3))
b = SectorLabel(F(1), F(1, 4), F(1, 3))
print(decide_equivalence(a, a).status, decide_equivalence(a, b).status)
print(decide_equivalence(a, SectorLabel(F(1), F(0), F(0))).status)
