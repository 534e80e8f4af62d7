# # The degree of the special polynomials
#
# phi(beta, k) predicts the degree in u from base-q digits alone. Here we
# compare it with the degree found by brute force, over F_4.

from fflseries import field_make, phi_degree, z_brute
from fflseries.powersums import boeckle_degree, sheats_test, power_sum

F4 = field_make(2, 2)
print(F4)

print("      " + " ".join("k=%-2d" % k for k in range(1, 9)))
for beta in range(1, 6):
    cells = []
    for k in range(1, 9):
        phi = phi_degree(F4, beta, k)
        deg = z_brute(F4, beta, k).degree
        cells.append("%d%s  " % (deg, "" if phi == deg else "!"))
    print("b=%d   " % beta + " ".join(cells))

# With beta = 0 the degree is the Boeckle bound instead.

print([boeckle_degree(F4, k) for k in range(1, 16)])
print([z_brute(F4, 0, k).degree for k in range(1, 16)])

# The digit criterion for S_d(k) != 0 avoids computing the sum at all.

F3 = field_make(3)
print([int(sheats_test(F3, 2, k)) for k in range(1, 30)])
print([int(not power_sum(F3, 2, k).is_zero()) for k in range(1, 30)])
