# coding: utf-8

# # Sector labels and Bopp realizations
#
# A sector is fixed by three rationals: hbar, the position noncommutativity
# theta, and the magnetic field B. Everything below is exact.

# In[1]:

from fractions import Fraction as F

from ncqm import SectorLabel, omega_nc, pfaffian, central_character
from ncqm import BoppParams, bopp_matrix, verify_sector_invariance, realization_transfer


# In[2]:

label = SectorLabel(F(1), F(1, 2), F(1, 3))
omega = omega_nc(label)
print(omega.to_list())
print("kappa =", label.kappa, " Pf =", pfaffian(omega))
print("regular:", label.is_regular, " generic:", label.is_generic)
print("central character:", central_character(label).to_list())


# The Pfaffian is always -hbar * kappa with kappa = hbar - theta*B, so the
# sector is degenerate exactly when theta*B = hbar.

# In[3]:

critical = SectorLabel(F(1), F(3), F(1, 3))
print(critical.kappa, critical.is_regular)


# # The two-parameter Bopp family
#
# Each admissible (r, s) gives a linear map S from canonical variables to the
# noncommutative ones. Pushing the canonical commutators through S reproduces
# the same sector for every choice.

# In[4]:

for r, s in [(0, 0), (F(1, 2), F(1, 2)), (1, F(1, 4))]:
    real = bopp_matrix(label, BoppParams(F(r), F(s)))
    print((r, s), "det S =", real.matrix.det(), " invariant:", verify_sector_invariance(real))


# Switching between two realizations of the same sector is itself linear.

# In[5]:

src = bopp_matrix(label, BoppParams(F(0), F(0)))
u = realization_transfer(src, BoppParams(F(1, 2), F(1, 2)))
print(u.to_list())
