# # Power sums and trivial zeros
#
# A = F_q[theta]. For a monic a we write chi_t(a) for a with theta replaced
# by t. The sums S_d(chi_t^beta, k) run over all monic a of degree d.

from fflseries import APoly, TPoly, field_make, power_sum, twisted_power_sum
from fflseries import l_value, trivial_zero_order, z_brute, z_recursive

F3 = field_make(3)

# Plain power sums first. S_1(1) vanishes over F_3 (theta + theta+1 + theta+2 = 3 theta + 3).

for k in range(1, 6):
    print("S_1(%d) =" % k, power_sum(F3, 1, k))

# The twisted version lives in A[t].

print(twisted_power_sum(F3, 1, 1, 2))

# ## Special polynomials
#
# Summing u^d S_d(chi_t^beta, k) over d gives a polynomial in u = 1/x. Two
# independent routes: sum the power sums directly, or use the recursion over
# pairs (alpha, l).

for beta, k in [(1, 1), (1, 2), (2, 3)]:
    a = z_brute(F3, beta, k)
    b = z_recursive(F3, beta, k)
    print(beta, k, a.z, a.z == b.z)

# ## Trivial zeros
#
# The value at x = 1 vanishes exactly when q - 1 divides beta + k, and the
# zero is always simple.

memo = {}
for beta in range(3):
    row = []
    for k in range(1, 7):
        v = l_value(F3, beta, k, memo)
        row.append("0" if v.is_zero() else ".")
    print("beta=%d" % beta, " ".join(row))

print("order at (1, 1):", trivial_zero_order(F3, 1, 1))
