# coding: utf-8

# # Moyal star products
#
# Symbols are polynomials in four phase-space variables with Gaussian
# rational coefficients. For a constant commutator matrix the star product
# terminates, so it can be computed exactly.

# In[1]:

from fractions import Fraction as F

from ncqm import SectorLabel, omega_nc, PolySymbol, moyal_star, star_commutator
from ncqm import pullback_linear, canonicalize, shadow_report


# In[2]:

label = SectorLabel(F(1), F(1, 2), F(1, 3))
omega = omega_nc(label)
x, y, px, py = (PolySymbol.variable(i) for i in range(4))
print(star_commutator(x, y, omega))
print(star_commutator(x, px, omega))
print(star_commutator(px, py, omega))


# In[3]:

f = x * x + px
g = y * py
print(moyal_star(f, g, omega))


# Pulling back along a Darboux map turns the noncommutative product into the
# canonical one.

# In[4]:

t = canonicalize(omega, label.hbar)
print(pullback_linear(star_commutator(x, y, omega), t))


# In[5]:

report = shadow_report(label, samples=4, seed=1)
print(report.intertwining_verified)
print(report.narrative)
