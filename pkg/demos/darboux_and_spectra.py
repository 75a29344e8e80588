# coding: utf-8

# # Darboux canonicalization
#
# Any nondegenerate antisymmetric matrix can be brought to the standard
# symplectic form by a rational change of basis.

# In[1]:

from fractions import Fraction as F

from ncqm import SectorLabel, omega_nc, CommutatorMatrix
from ncqm import canonicalize, intrinsic_canonicalization, is_darboux_map
from ncqm import QuadraticForm, transform_quadratic, williamson_frequencies, quadratic_spectrum
from ncqm import reduction_verdict


# In[2]:

label = SectorLabel(F(1), F(1, 2), F(1, 3))
omega = omega_nc(label)
t = canonicalize(omega, label.hbar)
print(t.matrix.to_list())
print("Darboux:", is_darboux_map(t.matrix, omega, label.hbar))


# The same works for a made-up 6x6 matrix, as long as it is nondegenerate.

# In[3]:

w = CommutatorMatrix(((0, 2, 1, 0, 0, 0), (-2, 0, 0, 1, 0, 3), (-1, 0, 0, 5, 1, 0),
                      (0, -1, -5, 0, 0, 1), (0, 0, -1, 0, 0, 1), (0, -3, 0, -1, -1, 0)))
print(is_darboux_map(canonicalize(w, F(1)).matrix, w, F(1)))


# There is also a closed-form map built from the label alone.

# In[4]:

ti = intrinsic_canonicalization(label)
print(ti.matrix.to_list())


# # Quadratic Hamiltonians
#
# An isotropic oscillator H = (X^2 + Y^2 + P_x^2 + P_y^2)/2 in this sector
# has two normal-mode frequencies, which follow from the eigenvalues of
# Omega times the Hessian.

# In[5]:

h = QuadraticForm.identity()
freqs = williamson_frequencies(h, omega)
print(freqs.frequencies)
print("ground energy:", quadratic_spectrum(freqs, [0, 0]))
print("first excitations:", quadratic_spectrum(freqs, [1, 0]), quadratic_spectrum(freqs, [0, 1]))


# In canonical variables the same Hamiltonian has a new (rational) Hessian.

# In[6]:

print(transform_quadratic(h, t).entries)


# In[7]:

print(reduction_verdict(label))
