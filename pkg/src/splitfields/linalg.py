"""Dense exact linear algebra over any FieldDescriptor.

Matrices are immutable row-major grids of field elements.  All algorithms are
exact Gaussian elimination; kernel bases follow the canonical free-variable
convention (each free column set to 1 in order) so downstream bases are
reproducible bit for bit.
"""

from __future__ import annotations

from .errors import DimensionMismatch, FieldMismatch, NotSquare


class Matrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, rows, cols, entries):
        entries = tuple(tuple(r) for r in entries)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise DimensionMismatch(f"expected a {rows}x{cols} grid")
        for r in entries:
            for e in r:
                if e.field != field:
                    raise FieldMismatch("entry outside the owner field")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_rows(cls, field, rows):
        rows = [list(r) for r in rows]
        return cls(field, len(rows), len(rows[0]) if rows else 0, rows)

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one(), field.zero()
        return cls(field, n, n,
                   [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, rows, cols):
        zero = field.zero()
        return cls(field, rows, cols, [[zero] * cols for _ in range(rows)])

    # -- basic access -----------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.field == other.field \
            and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def key(self):
        """Canonical hashable key (coordinate tuples only)."""
        return tuple(tuple(e.coords for e in r) for r in self.entries)

    def is_zero(self):
        return not any(any(r) for r in self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(repr(e) for e in r) for r in self.entries)
        return f"Matrix({self.rows}x{self.cols} over {self.field}: {body})"

    # -- arithmetic --------------------------------------------------------

    def _compat(self, other, same_shape):
        if not isinstance(other, Matrix) or other.field != self.field:
            raise FieldMismatch("matrices over the same field expected")
        if same_shape and (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shapes differ")

    def __add__(self, other):
        self._compat(other, True)
        return Matrix(self.field, self.rows, self.cols,
                      [[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._compat(other, True)
        return Matrix(self.field, self.rows, self.cols,
                      [[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.field, self.rows, self.cols,
                      [[-a for a in r] for r in self.entries])

    def scale(self, c):
        return Matrix(self.field, self.rows, self.cols,
                      [[c * a for a in r] for r in self.entries])

    def __matmul__(self, other):
        self._compat(other, False)
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = self.field.zero()
        out = []
        ocols = list(zip(*other.entries)) if other.entries else []
        for r in self.entries:
            row = []
            for c in ocols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(self.field, self.rows, other.cols, out)

    def apply(self, vec):
        """Matrix-vector product; ``vec`` is a sequence of field elements."""
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length does not match columns")
        zero = self.field.zero()
        out = []
        for r in self.entries:
            acc = zero
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def transpose(self):
        return Matrix(self.field, self.cols, self.rows,
                      list(zip(*self.entries)) if self.entries else [])

    def trace(self):
        if self.rows != self.cols:
            raise NotSquare("trace of a non-square matrix")
        acc = self.field.zero()
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def augment(self, other):
        self._compat(other, False)
        if self.rows != other.rows:
            raise DimensionMismatch("row counts differ")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      [list(r1) + list(r2)
                       for r1, r2 in zip(self.entries, other.entries)])

    def stack(self, other):
        self._compat(other, False)
        if self.cols != other.cols:
            raise DimensionMismatch("column counts differ")
        return Matrix(self.field, self.rows + other.rows, self.cols,
                      list(self.entries) + list(other.entries))

    # -- elimination --------------------------------------------------------

    def rref(self):
        """Reduced row echelon form: ``(R, rank, pivot column tuple)``."""
        m = [list(r) for r in self.entries]
        rows, cols = self.rows, self.cols
        pivots = []
        pr = 0
        for pc in range(cols):
            pivot_row = None
            for i in range(pr, rows):
                if m[i][pc]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
            inv = m[pr][pc].inverse()
            m[pr] = [inv * e for e in m[pr]]
            for i in range(rows):
                if i != pr and m[i][pc]:
                    c = m[i][pc]
                    m[i] = [a - c * b for a, b in zip(m[i], m[pr])]
            pivots.append(pc)
            pr += 1
            if pr == rows:
                break
        return Matrix(self.field, rows, cols, m), len(pivots), tuple(pivots)

    def rank(self):
        return self.rref()[1]

    def kernel_basis(self):
        """Canonical basis of the right null space, as coordinate tuples."""
        red, rank, pivots = self.rref()
        zero, one = self.field.zero(), self.field.one()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for j in free:
            v = [zero] * self.cols
            v[j] = one
            for i, pc in enumerate(pivots):
                v[pc] = -red.entries[i][j]
            basis.append(tuple(v))
        return basis

    def solve(self, b):
        """One particular solution of ``self @ x = b`` or None."""
        if len(b) != self.rows:
            raise DimensionMismatch("right-hand side length does not match rows")
        rhs = Matrix(self.field, self.rows, 1, [[e] for e in b])
        red, rank, pivots = self.augment(rhs).rref()
        if self.cols in pivots:
            return None
        zero = self.field.zero()
        x = [zero] * self.cols
        for i, pc in enumerate(pivots):
            x[pc] = red.entries[i][self.cols]
        return tuple(x)

    def inverse(self):
        if self.rows != self.cols:
            raise NotSquare("inverse of a non-square matrix")
        red, rank, pivots = self.augment(Matrix.identity(self.field, self.rows)).rref()
        if pivots[:self.rows] != tuple(range(self.rows)):
            return None
        return Matrix(self.field, self.rows, self.cols,
                      [r[self.cols:] for r in red.entries])

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows

    # -- products and minimal polynomials ------------------------------------

    def kronecker(self, other):
        self._compat(other, False)
        out = []
        for r1 in self.entries:
            for r2 in other.entries:
                row = []
                for a in r1:
                    row.extend(a * b for b in r2)
                out.append(row)
        return Matrix(self.field, self.rows * other.rows,
                      self.cols * other.cols, out)

    def vec(self):
        """Row-major flattening as a coordinate tuple."""
        return tuple(e for r in self.entries for e in r)

    def min_poly(self):
        """Monic minimal polynomial, little-endian list of field elements."""
        if self.rows != self.cols:
            raise NotSquare("minimal polynomial of a non-square matrix")
        n = self.rows
        if n == 0:
            return [self.field.one()]
        powers = [Matrix.identity(self.field, n)]
        while True:
            k = len(powers)
            cols = [p.vec() for p in powers]
            mat = Matrix(self.field, n * n, k,
                         [[cols[j][i] for j in range(k)] for i in range(n * n)])
            nxt = powers[-1] @ self
            sol = mat.solve(list(nxt.vec()))
            if sol is not None:
                return [-c for c in sol] + [self.field.one()]
            powers.append(nxt)


def row_space_basis(field, vectors):
    """Canonical (rref) basis of the span of the given coordinate tuples."""
    vectors = list(vectors)
    if not vectors:
        return []
    mat = Matrix.from_rows(field, vectors)
    red, rank, _ = mat.rref()
    return [red.row(i) for i in range(rank)]


def in_row_space(field, basis, vec):
    """Membership of ``vec`` in the span of ``basis`` (rows assumed independent)."""
    if not basis:
        return not any(bool(c) for c in vec)
    cols = len(vec)
    mat = Matrix(field, cols, len(basis),
                 [[basis[j][i] for j in range(len(basis))] for i in range(cols)])
    return mat.solve(list(vec)) is not None


def kronecker(a, b):
    return a.kronecker(b)
