"""Bounded complexes of finite-dimensional vector spaces and their chain maps.

Indexing is cohomological: the differential at degree i maps V_i to V_{i+1}.
A complex is supported on a finite window [lo, hi]; every space outside the
window is zero, so the represented complexes are automatically quasi-bounded.
The module also computes the four trace functionals (per degree, per degree
on cohomology, and their alternating sums over stretches) that govern the
commutator properties decided by :mod:`chaincomm.witnesses`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .fields import Field, Scalar
from .linalg import complement_basis, image_basis, kernel_basis, solve_linear
from .matrices import Matrix


class ChainComplex:
    """Finitely supported graded vector spaces with differentials.

    ``dims[j]`` is the dimension of the space in degree ``lo + j``;
    ``differentials[j]`` is the map out of degree ``lo + j`` and must have
    shape ``dims[j+1] x dims[j]``.  Construction checks shapes only; the
    composite condition d(i+1) . d(i) = 0 is reported by
    :func:`validate_complex` so that invalid data can be diagnosed rather
    than rejected blindly.
    """

    def __init__(self, field: Field, lo: int, dims: Sequence[int], differentials: Sequence[Matrix] = ()):
        if len(dims) == 0:
            raise ValueError("a complex needs a nonempty support window")
        if any(not isinstance(d, int) or d < 0 for d in dims):
            raise ValueError("dimensions must be nonnegative integers")
        expected = max(len(dims) - 1, 0)
        if len(differentials) != expected:
            raise ValueError(f"expected {expected} differentials, got {len(differentials)}")
        for j, d in enumerate(differentials):
            if d.field != field:
                raise ValueError(f"differential {j} has field {d.field}, expected {field}")
            if d.shape != (dims[j + 1], dims[j]):
                raise ValueError(
                    f"differential out of degree {lo + j} has shape {d.shape}, "
                    f"expected {(dims[j + 1], dims[j])}"
                )
        self.field = field
        self.lo = lo
        self.hi = lo + len(dims) - 1
        self._dims = tuple(dims)
        self._differentials = tuple(differentials)

    def dim(self, degree: int) -> int:
        if self.lo <= degree <= self.hi:
            return self._dims[degree - self.lo]
        return 0

    @property
    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    @property
    def dims(self) -> tuple[int, ...]:
        return self._dims

    @property
    def stored_differentials(self) -> tuple[Matrix, ...]:
        return self._differentials

    def differential(self, degree: int) -> Matrix:
        """The map V_degree -> V_{degree+1}; an empty/zero matrix off the window."""
        if self.lo <= degree < self.hi:
            return self._differentials[degree - self.lo]
        return Matrix.zeros(self.field, self.dim(degree + 1), self.dim(degree))

    def total_dim(self) -> int:
        return sum(self._dims)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChainComplex)
            and self.field == other.field
            and self.lo == other.lo
            and self._dims == other._dims
            and self._differentials == other._differentials
        )

    def __repr__(self) -> str:
        return f"ChainComplex({self.field.kind}, degrees {self.lo}..{self.hi}, dims {list(self._dims)})"


class ChainEndomorphism:
    """A degreewise square matrix family; validity (commuting with the
    differential) is checked by :func:`validate_chain_map`."""

    def __init__(self, complex: ChainComplex, maps: Sequence[Matrix]):
        if len(maps) != len(complex.dims):
            raise ValueError(f"expected {len(complex.dims)} maps, got {len(maps)}")
        for j, m in enumerate(maps):
            n = complex.dims[j]
            if m.field != complex.field:
                raise ValueError("map field does not match the complex")
            if m.shape != (n, n):
                raise ValueError(f"map at degree {complex.lo + j} has shape {m.shape}, expected {(n, n)}")
        self.complex = complex
        self._maps = tuple(maps)

    @classmethod
    def zero(cls, complex: ChainComplex) -> "ChainEndomorphism":
        return cls(complex, [Matrix.zeros(complex.field, n, n) for n in complex.dims])

    @classmethod
    def identity(cls, complex: ChainComplex) -> "ChainEndomorphism":
        return cls(complex, [Matrix.identity(complex.field, n) for n in complex.dims])

    @classmethod
    def from_map(cls, complex: ChainComplex, maps: Mapping[int, Matrix]) -> "ChainEndomorphism":
        return cls(
            complex,
            [maps.get(i, Matrix.zeros(complex.field, complex.dim(i), complex.dim(i))) for i in complex.degrees],
        )

    def map(self, degree: int) -> Matrix:
        if self.complex.lo <= degree <= self.complex.hi:
            return self._maps[degree - self.complex.lo]
        n = self.complex.dim(degree)
        return Matrix.zeros(self.complex.field, n, n)

    @property
    def maps(self) -> tuple[Matrix, ...]:
        return self._maps

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChainEndomorphism)
            and self.complex == other.complex
            and self._maps == other._maps
        )

    def __repr__(self) -> str:
        return f"ChainEndomorphism(degrees {self.complex.lo}..{self.complex.hi})"


class Homotopy:
    """A degree -1 family: the map at degree i goes V_i -> V_{i-1}.

    Any family of the right shapes is a legal operand; no algebraic
    condition is imposed.
    """

    def __init__(self, complex: ChainComplex, maps: Sequence[Matrix]):
        if len(maps) != len(complex.dims):
            raise ValueError(f"expected {len(complex.dims)} homotopy maps, got {len(maps)}")
        for j, m in enumerate(maps):
            degree = complex.lo + j
            want = (complex.dim(degree - 1), complex.dim(degree))
            if m.field != complex.field:
                raise ValueError("homotopy field does not match the complex")
            if m.shape != want:
                raise ValueError(f"homotopy at degree {degree} has shape {m.shape}, expected {want}")
        self.complex = complex
        self._maps = tuple(maps)

    @classmethod
    def zero(cls, complex: ChainComplex) -> "Homotopy":
        return cls(
            complex,
            [Matrix.zeros(complex.field, complex.dim(i - 1), complex.dim(i)) for i in complex.degrees],
        )

    @classmethod
    def from_map(cls, complex: ChainComplex, maps: Mapping[int, Matrix]) -> "Homotopy":
        return cls(
            complex,
            [
                maps.get(i, Matrix.zeros(complex.field, complex.dim(i - 1), complex.dim(i)))
                for i in complex.degrees
            ],
        )

    def map(self, degree: int) -> Matrix:
        if self.complex.lo <= degree <= self.complex.hi:
            return self._maps[degree - self.complex.lo]
        return Matrix.zeros(self.complex.field, self.complex.dim(degree - 1), self.complex.dim(degree))

    @property
    def maps(self) -> tuple[Matrix, ...]:
        return self._maps

    def __eq__(self, other) -> bool:
        return isinstance(other, Homotopy) and self.complex == other.complex and self._maps == other._maps


@dataclass(frozen=True)
class Stretch:
    """A maximal run of degrees whose interior differentials are all nonzero,
    flanked by zero differentials on both sides."""

    start: int
    end: int

    def degrees(self) -> range:
        return range(self.start, self.end + 1)

    def __repr__(self) -> str:
        return f"Stretch({self.start}..{self.end})"


@dataclass(frozen=True)
class CohomologySpace:
    """Bases chosen for one cohomology space: cocycles = ker d_i,
    boundaries = im d_{i-1} (both as column collections inside V_i)."""

    dim: int
    cocycle_basis: Matrix
    boundary_basis: Matrix


# ---------------------------------------------------------------------------
# validation


def validate_complex(c: ChainComplex) -> list[str]:
    """All composite-vanishing violations; empty iff the data is a complex."""
    violations = []
    for i in range(c.lo - 1, c.hi + 1):
        composite = c.differential(i + 1) * c.differential(i)
        if not composite.is_zero():
            violations.append(f"degree {i}: d({i + 1}) . d({i}) != 0")
    return violations


def validate_chain_map(phi: ChainEndomorphism) -> list[str]:
    """All failures of d . phi = phi . d; empty iff phi is a chain map."""
    c = phi.complex
    violations = []
    for i in range(c.lo - 1, c.hi + 1):
        lhs = c.differential(i) * phi.map(i)
        rhs = phi.map(i + 1) * c.differential(i)
        if lhs != rhs:
            violations.append(f"degree {i}: d({i}) . phi({i}) != phi({i + 1}) . d({i})")
    return violations


# ---------------------------------------------------------------------------
# cohomology


def cohomology(c: ChainComplex, degree: int) -> CohomologySpace:
    """Dimension and chosen bases of ker d_i / im d_{i-1} at one degree."""
    cocycles = kernel_basis(c.differential(degree))
    boundaries = image_basis(c.differential(degree - 1))
    return CohomologySpace(cocycles.cols - boundaries.cols, cocycles, boundaries)


def cohomology_lifts(c: ChainComplex, degree: int) -> tuple[Matrix, Matrix]:
    """(boundary basis, cocycle representatives extending it): the
    deterministic lift convention shared by every cohomology computation."""
    spaces = cohomology(c, degree)
    lifts = complement_basis(spaces.boundary_basis, spaces.cocycle_basis)
    return spaces.boundary_basis, lifts


def induced_cohomology_map(phi: ChainEndomorphism, degree: int) -> Matrix:
    """The matrix of phi on cohomology: lift representatives, apply phi,
    re-express modulo boundaries.  Independent of the choice of lifts."""
    c = phi.complex
    boundaries, lifts = cohomology_lifts(c, degree)
    h = lifts.cols
    if h == 0:
        return Matrix.zeros(c.field, 0, 0)
    images = phi.map(degree) * lifts
    basis = Matrix(
        c.field,
        boundaries.rows,
        boundaries.cols + lifts.cols,
        (e for i in range(boundaries.rows) for e in (*boundaries.row(i), *lifts.row(i))),
    )
    coords = solve_linear(basis, images)
    if coords is None:
        raise ValueError("endomorphism does not preserve cocycles; not a chain map?")
    return coords.submatrix(boundaries.cols, boundaries.cols + h, 0, h)


# ---------------------------------------------------------------------------
# stretches and traces


def stretches(c: ChainComplex) -> tuple[Stretch, ...]:
    """Maximal runs inside the window; off-window degrees (whose traces vanish
    identically) are not reported."""
    found = []
    start = c.lo
    for i in c.degrees:
        if c.differential(i).is_zero():
            found.append(Stretch(start, i))
            start = i + 1
    return tuple(found)


def degree_trace(phi: ChainEndomorphism, degree: int) -> Scalar:
    return phi.map(degree).trace()


def cohomology_trace(phi: ChainEndomorphism, degree: int) -> Scalar:
    return induced_cohomology_map(phi, degree).trace()


@dataclass(frozen=True)
class TraceReport:
    """All four trace families of one chain endomorphism plus the condition
    flags for the four commutator-type properties."""

    degree_traces: dict[int, Scalar]
    cohomology_traces: dict[int, Scalar]
    stretches: tuple[Stretch, ...]
    stretch_traces: dict[Stretch, Scalar]
    stretch_cohomology_traces: dict[Stretch, Scalar]
    quasi_bounded: bool
    degree_traces_vanish: bool
    cohomology_traces_vanish: bool
    degree_and_cohomology_traces_vanish: bool
    stretch_traces_vanish: bool


def trace_report(phi: ChainEndomorphism) -> TraceReport:
    c = phi.complex
    f = c.field
    per_degree = {i: degree_trace(phi, i) for i in c.degrees}
    per_degree_h = {i: cohomology_trace(phi, i) for i in c.degrees}
    runs = stretches(c)
    stretch_traces = {
        s: f.normalize(sum((f.mul(f.alternating_sign(i), per_degree[i]) for i in s.degrees()), start=0))
        for s in runs
    }
    stretch_traces_h = {
        s: f.normalize(sum((f.mul(f.alternating_sign(i), per_degree_h[i]) for i in s.degrees()), start=0))
        for s in runs
    }
    quasi_bounded = any(c.differential(i).is_zero() for i in range(c.lo - 1, c.hi + 2))
    t1 = all(f.is_zero(v) for v in per_degree.values())
    t3 = all(f.is_zero(v) for v in per_degree_h.values())
    t4 = all(f.is_zero(v) for v in stretch_traces.values())
    return TraceReport(
        degree_traces=per_degree,
        cohomology_traces=per_degree_h,
        stretches=runs,
        stretch_traces=stretch_traces,
        stretch_cohomology_traces=stretch_traces_h,
        quasi_bounded=quasi_bounded,
        degree_traces_vanish=t1,
        cohomology_traces_vanish=t3,
        degree_and_cohomology_traces_vanish=t1 and t3,
        stretch_traces_vanish=t4,
    )


# ---------------------------------------------------------------------------
# algebra of chain maps and homotopies


def _check_same_complex(a: ChainEndomorphism, b: ChainEndomorphism) -> None:
    if a.complex != b.complex:
        raise ValueError("chain endomorphisms live on different complexes")


def _revalidated(result: ChainEndomorphism) -> ChainEndomorphism:
    # closed under the algebra when the operands are chain maps; failing here
    # means an operand was not one
    problems = validate_chain_map(result)
    if problems:
        raise ValueError("result is not a chain map (operand was not one): " + "; ".join(problems))
    return result


def add(a: ChainEndomorphism, b: ChainEndomorphism) -> ChainEndomorphism:
    _check_same_complex(a, b)
    return _revalidated(ChainEndomorphism(a.complex, [x + y for x, y in zip(a.maps, b.maps)]))


def subtract(a: ChainEndomorphism, b: ChainEndomorphism) -> ChainEndomorphism:
    _check_same_complex(a, b)
    return _revalidated(ChainEndomorphism(a.complex, [x - y for x, y in zip(a.maps, b.maps)]))


def compose(a: ChainEndomorphism, b: ChainEndomorphism) -> ChainEndomorphism:
    """Degreewise product a . b."""
    _check_same_complex(a, b)
    return _revalidated(ChainEndomorphism(a.complex, [x * y for x, y in zip(a.maps, b.maps)]))


def commutator(a: ChainEndomorphism, b: ChainEndomorphism) -> ChainEndomorphism:
    """a b - b a in the endomorphism ring of the complex."""
    _check_same_complex(a, b)
    return _revalidated(ChainEndomorphism(a.complex, [x * y - y * x for x, y in zip(a.maps, b.maps)]))


def scale(a: ChainEndomorphism, scalar: Scalar) -> ChainEndomorphism:
    return _revalidated(ChainEndomorphism(a.complex, [m.scale(scalar) for m in a.maps]))


def homotopy_boundary(s: Homotopy) -> ChainEndomorphism:
    """The chain endomorphism d . s + s . d; always a chain map (asserted)."""
    c = s.complex
    return _revalidated(
        ChainEndomorphism(
            c,
            [c.differential(i - 1) * s.map(i) + s.map(i + 1) * c.differential(i) for i in c.degrees],
        )
    )


# ---------------------------------------------------------------------------
# the linear space of chain endomorphisms


def chain_map_basis(c: ChainComplex) -> tuple[ChainEndomorphism, ...]:
    """A deterministic basis of the space of chain endomorphisms, obtained by
    solving the commutation constraints d . phi = phi . d as a linear system
    in the matrix entries (stacked row-major, degrees ascending)."""
    field = c.field
    sizes = list(c.dims)
    offsets = [0]
    for n in sizes:
        offsets.append(offsets[-1] + n * n)
    total = offsets[-1]

    rows: list[list[Scalar]] = []
    zero = field.zero
    for i in range(c.lo, c.hi):
        d = c.differential(i)
        n_i = c.dim(i)
        n_next = c.dim(i + 1)
        base_i = offsets[i - c.lo]
        base_next = offsets[i + 1 - c.lo]
        for r in range(n_next):
            for col in range(n_i):
                row = [zero] * total
                # (d . phi_i)[r, col] contributes +d[r, k] * phi_i[k, col]
                for k in range(n_i):
                    coeff = d.entry(r, k)
                    if coeff != 0:
                        row[base_i + k * n_i + col] = field.add(row[base_i + k * n_i + col], coeff)
                # (phi_{i+1} . d)[r, col] contributes -phi_{i+1}[r, k] * d[k, col]
                for k in range(n_next):
                    coeff = d.entry(k, col)
                    if coeff != 0:
                        idx = base_next + r * n_next + k
                        row[idx] = field.sub(row[idx], coeff)
                rows.append(row)

    constraint = Matrix(field, len(rows), total, (e for row in rows for e in row))
    basis_vectors = kernel_basis(constraint)
    basis = []
    for j in range(basis_vectors.cols):
        maps = []
        for idx, n in enumerate(sizes):
            start = offsets[idx]
            maps.append(Matrix(field, n, n, (basis_vectors.entry(start + t, j) for t in range(n * n))))
        basis.append(ChainEndomorphism(c, maps))
    return tuple(basis)
