"""SL_n over exact rings: determinant-1 matrices and root-group generators.

Roots of type A_{n-1} are pairs ``(i, j)`` of distinct 1-based indices;
the root group element ``x_(i,j)(a)`` is the identity with ``a`` in row i,
column j.  The Weyl and torus elements are built from the three- and
six-letter products

    w(u) = x_a(u) x_{-a}(-1/u) x_a(u),      h(u) = w(u) w(1)^{-1},

and those letter sequences are shared verbatim with the loop and
Steinberg-word layers.
"""

from __future__ import annotations

from .rings import QQ, FiniteField, PolyRing


def check_root(root, n: int):
    """Validate a type-A root (i, j), 1 <= i != j <= n."""
    try:
        i, j = root
    except (TypeError, ValueError):
        raise ValueError(f"root must be a pair of indices, got {root!r}")
    if not (isinstance(i, int) and isinstance(j, int)):
        raise ValueError(f"root indices must be integers, got {root!r}")
    if i == j:
        raise ValueError(f"root indices must differ, got {root!r}")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"root {root!r} out of range for SL_{n}")
    return i, j


def negate_root(root):
    i, j = root
    return (j, i)


def _is_scalar_field(ring) -> bool:
    return ring is QQ or isinstance(ring, FiniteField)


def _det_cofactor(rows, ring):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    det = ring.zero
    sign = 1
    for k in range(n):
        a = rows[0][k]
        if a == ring.zero:
            sign = -sign
            continue
        minor = [[row[c] for c in range(n) if c != k] for row in rows[1:]]
        term = a * _det_cofactor(minor, ring)
        det = det + term if sign > 0 else det - term
        sign = -sign
    return det


def _det_field(rows, field):
    # Gaussian elimination with division; rows is a mutable copy
    n = len(rows)
    det = field.one
    for k in range(n):
        piv = None
        for r in range(k, n):
            if rows[r][k] != field.zero:
                piv = r
                break
        if piv is None:
            return field.zero
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            det = -det
        det = det * rows[k][k]
        inv = field.invert(rows[k][k])
        for r in range(k + 1, n):
            c = rows[r][k]
            if c != field.zero:
                f = c * inv
                rows[r] = [rows[r][m] - f * rows[k][m] for m in range(n)]
    return det


class GroupMatrix:
    """An n x n matrix with determinant exactly 1 over a declared ring.

    The size is part of the value; mixing sizes or rings in products is a
    construction error, never silent coercion.
    """

    __slots__ = ("ring", "n", "rows", "_hash")

    def __init__(self, ring, rows, _checked: bool = False):
        n = len(rows)
        ent = tuple(tuple(ring(x) for x in row) for row in rows)
        if any(len(row) != n for row in ent):
            raise ValueError("matrix must be square")
        self.ring = ring
        self.n = n
        self.rows = ent
        self._hash = None
        if not _checked and self.det() != ring.one:
            raise ValueError("determinant is not 1")

    @classmethod
    def identity(cls, ring, n: int) -> "GroupMatrix":
        one, zero = ring.one, ring.zero
        return cls(ring, [[one if i == j else zero for j in range(n)]
                          for i in range(n)], _checked=True)

    def det(self):
        if _is_scalar_field(self.ring):
            return _det_field([list(r) for r in self.rows], self.ring)
        return _det_cofactor([list(r) for r in self.rows], self.ring)

    def entry(self, i: int, j: int):
        """Entry at 1-based position (i, j)."""
        return self.rows[i - 1][j - 1]

    def __mul__(self, other):
        if not isinstance(other, GroupMatrix):
            return NotImplemented
        if other.ring != self.ring or other.n != self.n:
            raise ValueError("matrix product needs matching ring and size")
        n = self.n
        a, b = self.rows, other.rows
        zero = self.ring.zero
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                s = zero
                for k in range(n):
                    aik = a[i][k]
                    if aik != zero:
                        s = s + aik * b[k][j]
                row.append(s)
            out.append(row)
        # products of determinant-1 matrices stay determinant 1 exactly
        return GroupMatrix(self.ring, out, _checked=True)

    def inverse(self) -> "GroupMatrix":
        ring, n = self.ring, self.n
        if _is_scalar_field(ring):
            # Gauss-Jordan
            aug = [list(self.rows[i]) +
                   [ring.one if i == j else ring.zero for j in range(n)]
                   for i in range(n)]
            for k in range(n):
                piv = next(r for r in range(k, n) if aug[r][k] != ring.zero)
                if piv != k:
                    aug[k], aug[piv] = aug[piv], aug[k]
                inv = ring.invert(aug[k][k])
                aug[k] = [x * inv for x in aug[k]]
                for r in range(n):
                    if r != k and aug[r][k] != ring.zero:
                        c = aug[r][k]
                        aug[r] = [x - c * y for x, y in zip(aug[r], aug[k])]
            return GroupMatrix(ring, [row[n:] for row in aug], _checked=True)
        # adjugate; the determinant is 1 so no division is needed
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = [[self.rows[r][c] for c in range(n) if c != i]
                         for r in range(n) if r != j]
                cof = _det_cofactor(minor, ring) if n > 1 else ring.one
                if (i + j) % 2:
                    cof = -cof
                row.append(cof)
            out.append(row)
        return GroupMatrix(ring, out, _checked=True)

    def is_identity(self) -> bool:
        one, zero = self.ring.one, self.ring.zero
        return all(self.rows[i][j] == (one if i == j else zero)
                   for i in range(self.n) for j in range(self.n))

    def __eq__(self, other):
        if not isinstance(other, GroupMatrix):
            return NotImplemented
        return (self.ring == other.ring and self.n == other.n
                and self.rows == other.rows)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __str__(self):
        return "\n".join(
            "[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)

    def __repr__(self):
        return f"GroupMatrix({self.n}x{self.n} over {self.ring!r})"


def elem(root, a, n: int, ring) -> GroupMatrix:
    """Root group element x_(i,j)(a): identity plus ``a`` at (i, j)."""
    i, j = check_root(root, n)
    a = ring(a)
    one, zero = ring.one, ring.zero
    rows = [[one if r == c else zero for c in range(n)] for r in range(n)]
    rows[i - 1][j - 1] = a
    return GroupMatrix(ring, rows, _checked=True)


def product_of_elementaries(ring, n: int, factors) -> GroupMatrix:
    """Multiply out x_{a_1}(u_1) x_{a_2}(u_2) ... with O(n) column updates."""
    one, zero = ring.one, ring.zero
    rows = [[one if r == c else zero for c in range(n)] for r in range(n)]
    for root, param in factors:
        i, j = check_root(root, n)
        f = ring(param)
        if f == zero:
            continue
        i -= 1
        j -= 1
        for r in range(n):
            x = rows[r][i]
            if x != zero:
                rows[r][j] = rows[r][j] + x * f
    return GroupMatrix(ring, rows, _checked=True)


def invert_letters(letters):
    """Formal inverse of an elementary letter sequence."""
    return [(root, -param) for root, param in reversed(list(letters))]


def w_letter_seq(root, u, ring):
    """The three letters of w_a(u) = x_a(u) x_{-a}(-1/u) x_a(u)."""
    u = ring(u)
    u_inv = ring.invert(u)
    return [(root, u), (negate_root(root), -u_inv), (root, u)]


def h_letter_seq(root, u, ring):
    """The six letters of h_a(u) = w_a(u) w_a(1)^{-1}."""
    return w_letter_seq(root, u, ring) + invert_letters(
        w_letter_seq(root, ring.one, ring))


def c_letter_seq(root, a, b, ring):
    """The eighteen letters of h_a(a) h_a(b) h_a(ab)^{-1}."""
    a = ring(a)
    b = ring(b)
    return (h_letter_seq(root, a, ring) + h_letter_seq(root, b, ring)
            + invert_letters(h_letter_seq(root, a * b, ring)))


def w_elem(root, u, n: int, ring) -> GroupMatrix:
    """Monomial element w_(i,j)(u); in SL_2 it is [[0, u], [-1/u, 0]]."""
    return product_of_elementaries(ring, n, w_letter_seq(root, u, ring))


def h_elem(root, u, n: int, ring) -> GroupMatrix:
    """Torus element h_(i,j)(u) = diag(..., u at i, 1/u at j, ...)."""
    return product_of_elementaries(ring, n, h_letter_seq(root, u, ring))


def eval_matrix(m: GroupMatrix, t) -> GroupMatrix:
    """Evaluate a matrix over k[T] entrywise at T = t.

    Evaluation is a ring homomorphism, so the determinant stays 1.
    """
    ring = m.ring
    if not isinstance(ring, PolyRing) or not ring.univariate:
        raise ValueError("eval_matrix needs a matrix over a univariate ring")
    var = ring.variables[0]
    t = ring.base(t)
    rows = [[x.evaluate({var: t}) for x in row] for row in m.rows]
    return GroupMatrix(ring.base, rows, _checked=True)


def commutator(a: GroupMatrix, b: GroupMatrix) -> GroupMatrix:
    """[a, b] = a b a^{-1} b^{-1}."""
    return a * b * a.inverse() * b.inverse()
