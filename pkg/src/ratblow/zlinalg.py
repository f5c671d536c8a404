"""Exact integer matrix algebra: Smith normal form and abelian group cokernels.

Everything here runs on arbitrary-precision Python integers, so results are
exact at any magnitude.  The central use case is presenting a finitely
generated abelian group by an integer relation matrix and reading off its
invariant-factor decomposition.

Conventions
-----------
* Rows index relations, columns index generators; the cokernel of an r x n
  matrix R is Z^n / (row span of R).
* ``snf(M)`` returns D = U @ M @ V with U, V unimodular and D diagonal,
  non-negative, each diagonal entry dividing the next.
* Invariant factors equal to 1 are dropped when a group is reported.

All values are immutable after construction and every function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm


class ZLinAlgError(ValueError):
    """Raised on malformed matrix input (shape mismatch, non-square, ...)."""


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix with entries stored row-major as nested tuples."""

    rows: int
    cols: int
    data: tuple

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ZLinAlgError("ragged rows: expected %d columns" % ncols)
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n))
                               for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ZLinAlgError("shape mismatch in product: %dx%d @ %dx%d"
                               % (self.rows, self.cols, other.rows, other.cols))
        ot = list(zip(*other.data)) if other.data else []
        out = []
        for row in self.data:
            out.append(tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
                       if ot else (0,) * other.cols)
        return IntMatrix(self.rows, other.cols, tuple(out))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.data)) if self.data else ())

    def diagonal(self) -> tuple:
        return tuple(self.data[i][i] for i in range(min(self.rows, self.cols)))

    def to_text(self) -> str:
        """Serialize in the plain text exchange format.

        First line is "rows cols", then one line of space-separated integers
        per row.
        """
        lines = ["%d %d" % (self.rows, self.cols)]
        lines += [" ".join(str(x) for x in r) for r in self.data]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "IntMatrix":
        tokens = text.split()
        if len(tokens) < 2:
            raise ZLinAlgError("matrix text must start with 'rows cols'")
        try:
            r, c = int(tokens[0]), int(tokens[1])
            entries = [int(t) for t in tokens[2:]]
        except ValueError as exc:
            raise ZLinAlgError("non-integer token in matrix text") from exc
        if r < 0 or c < 0 or len(entries) != r * c:
            raise ZLinAlgError("expected %d entries for a %dx%d matrix, got %d"
                               % (r * c, r, c, len(entries)))
        return cls(r, c, tuple(tuple(entries[i * c:(i + 1) * c]) for i in range(r)))

    def __str__(self):
        return self.to_text().rstrip("\n")


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form D = U @ M @ V of the input M."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group in canonical invariant-factor form.

    ``torsion`` is the chain of invariant factors (each >= 2, each dividing
    the next); two values are equal exactly when the groups are isomorphic.
    """

    free_rank: int
    torsion: tuple

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ZLinAlgError("torsion %r is not a divisibility chain" % (self.torsion,))
        if any(t < 2 for t in self.torsion):
            raise ZLinAlgError("invariant factors must be >= 2")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self):
        """Number of elements, or None when the group is infinite."""
        if self.free_rank:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def exponent(self):
        """Smallest n > 0 with n*g = 0 for all g, or None if none exists."""
        if self.free_rank:
            return None
        return self.torsion[-1] if self.torsion else 1

    def __str__(self):
        parts = ["Z"] * self.free_rank + ["Z/%d" % t for t in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CokernelElement:
    """Image of a vector in a cokernel, in canonical coordinates.

    ``residues`` pairs with ``moduli`` (the invariant factors >= 2) and
    ``free`` lists the coordinates along the free summands.
    """

    moduli: tuple
    residues: tuple
    free: tuple

    @property
    def is_zero(self) -> bool:
        return not any(self.residues) and not any(self.free)

    def order(self):
        """Order of the element in the quotient, None when infinite."""
        if any(self.free):
            return None
        n = 1
        for m, r in zip(self.moduli, self.residues):
            if r:
                n = lcm(n, m // gcd(m, r))
        return n

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = ["%d (mod %d)" % (r, m) for m, r in zip(self.moduli, self.residues)]
        parts += [str(x) for x in self.free]
        return "(" + ", ".join(parts) + ")"


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _add_row(a, dst, src, q):
    # row[dst] += q * row[src]
    a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_col(a, dst, src, q):
    for row in a:
        row[dst] += q * row[src]


def snf(m: IntMatrix) -> SNFResult:
    """Smith normal form with unimodular transforms.

    Pivots are chosen as the nonzero entry of least absolute value in the
    remaining block, which keeps coefficient growth tame; the result is
    independent of that choice.
    """
    a = [list(r) for r in m.data]
    u = [[1 if i == j else 0 for j in range(m.rows)] for i in range(m.rows)]
    v = [[1 if i == j else 0 for j in range(m.cols)] for i in range(m.cols)]

    t = 0
    while t < min(m.rows, m.cols):
        pivot = None
        for i in range(t, m.rows):
            for j in range(t, m.cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        _swap_rows(a, t, pivot[0])
        _swap_rows(u, t, pivot[0])
        _swap_cols(a, t, pivot[1])
        _swap_cols(v, t, pivot[1])

        while True:
            # Clear column t below the pivot.  A nonzero remainder becomes
            # the new, smaller pivot and we start over.
            restarted = False
            for i in range(t + 1, m.rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
                    if a[i][t]:
                        _swap_rows(a, t, i)
                        _swap_rows(u, t, i)
                        restarted = True
                        break
            if restarted:
                continue
            # Clear row t right of the pivot.
            for j in range(t + 1, m.cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)
                    if a[t][j]:
                        _swap_cols(a, t, j)
                        _swap_cols(v, t, j)
                        restarted = True
                        break
            if restarted:
                continue
            # Pivot must divide the whole remaining block, or fold the
            # offending row into row t and reduce again.
            offender = None
            for i in range(t + 1, m.rows):
                if any(a[i][j] % a[t][t] for j in range(t + 1, m.cols)):
                    offender = i
                    break
            if offender is not None:
                _add_row(a, t, offender, 1)
                _add_row(u, t, offender, 1)
                continue
            break

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    d = IntMatrix(m.rows, m.cols, tuple(tuple(r) for r in a))
    u_m = IntMatrix(m.rows, m.rows, tuple(tuple(r) for r in u))
    v_m = IntMatrix(m.cols, m.cols, tuple(tuple(r) for r in v))
    return SNFResult(D=d, U=u_m, V=v_m)


def determinant(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ZLinAlgError("determinant requires a square matrix, got %dx%d"
                           % (m.rows, m.cols))
    n = m.rows
    if n == 0:
        return 1
    a = [list(r) for r in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    _swap_rows(a, k, i)
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def cokernel(relations: IntMatrix) -> AbelianGroup:
    """Quotient Z^cols / (row span), in canonical form."""
    diag = snf(relations).D.diagonal()
    torsion = tuple(d for d in diag if d > 1)
    rank = sum(1 for d in diag if d != 0)
    return AbelianGroup(free_rank=relations.cols - rank, torsion=torsion)


def class_of(v, relations: IntMatrix) -> CokernelElement:
    """Image of the vector v in the cokernel of ``relations``.

    Coordinates refer to the canonical decomposition: one residue per
    invariant factor >= 2 plus integer coordinates along free summands.
    """
    v = [int(x) for x in v]
    if len(v) != relations.cols:
        raise ZLinAlgError("vector length %d does not match %d generators"
                           % (len(v), relations.cols))
    res = snf(relations)
    diag = res.D.diagonal()
    # w = v @ V identifies Z^n / rowspan(R) with the direct sum of Z/d_i.
    w = [sum(v[i] * res.V.data[i][j] for i in range(len(v)))
         for j in range(relations.cols)]
    moduli, residues, free = [], [], []
    for j, x in enumerate(w):
        d = diag[j] if j < len(diag) else 0
        if d == 0:
            free.append(x)
        elif d > 1:
            moduli.append(d)
            residues.append(x % d)
        # d == 1 coordinates are trivial and dropped
    return CokernelElement(moduli=tuple(moduli), residues=tuple(residues),
                           free=tuple(free))
