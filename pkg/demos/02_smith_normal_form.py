"""Exact Smith normal form and abelian group presentations.

Everything runs on arbitrary-precision integers: no overflow, no rounding,
at any magnitude.
"""

from ratblow import IntMatrix, class_of, cokernel, determinant, snf

# D = U M V with U, V unimodular and a divisibility chain on the diagonal.
m = IntMatrix.from_rows([[2, 0], [0, 3]])
res = snf(m)
print("M =")
print(m)
print("D diagonal:", res.D.diagonal(), " (Z/2 + Z/3 is cyclic of order 6)")
print("U M V == D:", (res.U @ m) @ res.V == res.D)
print()

# The cokernel of a relation matrix is the group it presents.  Rows are
# relations, columns are generators.
tridiag = IntMatrix.from_rows([
    [-8, 1, 0, 0, 0],
    [1, -2, 1, 0, 0],
    [0, 1, -2, 1, 0],
    [0, 0, 1, -2, 1],
    [0, 0, 0, 1, -2],
])
print("plumbing matrix of [8,2,2,2,2]: det =", determinant(tridiag))
print("its cokernel:", cokernel(tridiag))
print()

# class_of tracks a single element through the quotient.
rel = IntMatrix.from_rows([[36]])
print("36 in Z/36 is zero:", class_of([36], rel).is_zero)
print("1 in Z/36 has order:", class_of([1], rel).order())
print("order of 6:", class_of([6], rel).order())
print()

# exactness at silly magnitudes
big = 10 ** 30
huge = IntMatrix.from_rows([[big, 1], [1, big]])
print("det of a 10^30-entry matrix:", determinant(huge))
