# # Carlitz interpolation and the Wagner coefficients
#
# M_d(f) interpolates f on the monic polynomials of degree d, up to the
# constant m_one(d). For F_q-linear f it is affine in z.

from fflseries import LinearMapSpec, carlitz_approx, field_make, m_one
from fflseries import APoly, TPoly, wagner_coeff, wagner_product, pellarin_degree_sum
from fflseries.carlitz import enumerate_monic, factorials

F2 = field_make(2)
chi = LinearMapSpec.chi(F2, 2)
M = carlitz_approx(F2, 2, chi)
print(M)
print("affine:", M.is_affine(), " m_one:", m_one(F2, 2))

for b in enumerate_monic(F2, 2):
    print(b, M(b.embed(TPoly)) == chi(b) * m_one(F2, 2))

# ## b_d
#
# The constant term of M_d(chi_t), rescaled by L_d / D_d, factors completely
# as a product of t - theta^(q^l).

F3 = field_make(3)
for d in range(4):
    b = wagner_coeff(F3, d).b
    print(d, b == wagner_product(F3, d), b.degree)

# At t = theta^(q^d) it gives D_d. At t = theta^d it does not.

th = APoly.theta(F2)
b2 = wagner_coeff(F2, 2).b
print(b2.specialize_t(th**4) == factorials(F2, 2).D, b2.specialize_t(th**2))

# And the degree-d part of sum chi_t(a)/a is (-1)^d b_d / L_d.

print(pellarin_degree_sum(F3, 2))
