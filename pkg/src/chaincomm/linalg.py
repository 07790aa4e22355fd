"""Exact dense linear algebra: row reduction, kernels, images, Sylvester solves.

Everything returns exact results over Q or F_p; all choices (pivot order,
free-variable values, complement selection) are deterministic so that every
downstream construction is reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import Matrix, hstack, kron


@dataclass(frozen=True)
class RrefResult:
    """Reduced row-echelon form together with the invertible left transform."""

    reduced: Matrix
    transform: Matrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rref(m: Matrix) -> RrefResult:
    """Gauss-Jordan elimination.  transform * m == reduced, transform invertible."""
    field = m.field
    rows = [list(m.row(i)) for i in range(m.rows)]
    trans = [list(Matrix.identity(field, m.rows).row(i)) for i in range(m.rows)]
    pivots: list[int] = []
    pivot_row = 0
    for col in range(m.cols):
        pivot = None
        for r in range(pivot_row, m.rows):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != pivot_row:
            rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
            trans[pivot_row], trans[pivot] = trans[pivot], trans[pivot_row]
        inv = field.invert(rows[pivot_row][col])
        if inv != field.one:
            rows[pivot_row] = [field.mul(inv, e) for e in rows[pivot_row]]
            trans[pivot_row] = [field.mul(inv, e) for e in trans[pivot_row]]
        for r in range(m.rows):
            if r == pivot_row:
                continue
            factor = rows[r][col]
            if factor == 0:
                continue
            rows[r] = [field.sub(a, field.mul(factor, b)) for a, b in zip(rows[r], rows[pivot_row])]
            trans[r] = [field.sub(a, field.mul(factor, b)) for a, b in zip(trans[r], trans[pivot_row])]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == m.rows:
            break
    reduced = Matrix(field, m.rows, m.cols, (e for row in rows for e in row))
    transform = Matrix(field, m.rows, m.rows, (e for row in trans for e in row))
    return RrefResult(reduced, transform, tuple(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def is_invertible(m: Matrix) -> bool:
    """Square with full rank; the 0x0 matrix is invertible by convention."""
    return m.is_square and rank(m) == m.rows


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise ValueError("inverse of a non-square matrix")
    result = rref(m)
    if result.rank != m.rows:
        raise ValueError("matrix is singular")
    return result.transform


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form a deterministic basis of ker(m); count = cols - rank."""
    field = m.field
    result = rref(m)
    pivot_of_col = {col: r for r, col in enumerate(result.pivots)}
    free_cols = [c for c in range(m.cols) if c not in pivot_of_col]
    columns = []
    for f in free_cols:
        vec = [field.zero] * m.cols
        vec[f] = field.one
        for r, col in enumerate(result.pivots):
            vec[col] = field.neg(result.reduced.entry(r, f))
        columns.append(vec)
    return Matrix(field, m.cols, len(columns), (columns[j][i] for i in range(m.cols) for j in range(len(columns))))


def image_basis(m: Matrix) -> Matrix:
    """The pivot columns of m: a deterministic basis of the column space."""
    return m.take_columns(list(rref(m).pivots))


def complement_basis(inside: Matrix, ambient_basis: Matrix) -> Matrix:
    """Greedily extend the independent columns of ``inside`` to a basis of
    span(ambient_basis), choosing ambient columns by ascending index."""
    if inside.rows != ambient_basis.rows:
        raise ValueError("row count mismatch")
    if rank(inside) != inside.cols:
        raise ValueError("inside columns are linearly dependent")
    current = inside
    current_rank = inside.cols
    chosen: list[int] = []
    for j in range(ambient_basis.cols):
        candidate = hstack([current, ambient_basis.take_columns([j])])
        r = rank(candidate)
        if r > current_rank:
            chosen.append(j)
            current = candidate
            current_rank = r
    return ambient_basis.take_columns(chosen)


def solve_linear(a: Matrix, b: Matrix) -> Matrix | None:
    """One exact solution of a*x = b (free variables set to zero), or None.

    b may have several columns; each is solved against the same reduction.
    """
    if a.rows != b.rows:
        raise ValueError("row count mismatch between system and right-hand side")
    field = a.field
    result = rref(a)
    c = result.transform * b
    for r in range(result.rank, a.rows):
        if any(c.entry(r, j) != 0 for j in range(b.cols)):
            return None
    x = [[field.zero] * b.cols for _ in range(a.cols)]
    for r, col in enumerate(result.pivots):
        for j in range(b.cols):
            x[col][j] = c.entry(r, j)
    return Matrix(field, a.cols, b.cols, (e for row in x for e in row))


def sylvester_operator(a: Matrix, b: Matrix) -> Matrix:
    """kron(a, I) - kron(I, b^T): the coefficient matrix of X -> a X - X b
    acting on the row-major vectorization of X."""
    if not a.is_square or not b.is_square:
        raise ValueError("sylvester_operator needs square matrices")
    if a.field != b.field:
        raise ValueError("field mismatch")
    field = a.field
    return kron(a, Matrix.identity(field, b.rows)) - kron(Matrix.identity(field, a.rows), b.transpose())


def sylvester_solve(a: Matrix, b: Matrix, c: Matrix) -> Matrix | None:
    """Solve a*X - X*b = c exactly via the Kronecker linear system, or None."""
    if not a.is_square or not b.is_square:
        raise ValueError("sylvester_solve needs square a and b")
    if c.shape != (a.rows, b.rows):
        raise ValueError(f"right-hand side must be {a.rows}x{b.rows}, got {c.shape}")
    operator = sylvester_operator(a, b)
    rhs = Matrix(c.field, c.rows * c.cols, 1, c.entries)  # row-major vectorization
    vec = solve_linear(operator, rhs)
    if vec is None:
        return None
    return Matrix(c.field, c.rows, c.cols, vec.entries)
