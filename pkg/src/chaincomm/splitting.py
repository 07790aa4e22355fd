"""Standard-form splittings of a complex.

For a valid complex one can choose, degree by degree, an isomorphism

    V_i  =  B_i  (+)  H_i  (+)  B_{i+1}

(boundaries, a lift of cohomology, a complement mapping isomorphically onto
the next boundaries) under which every differential becomes the standard
block matrix whose only nonzero block is the identity in the upper-right
corner.  Chain endomorphisms then become block upper-triangular with the
same boundary block shared by adjacent degrees; that block data drives all
witness constructions.

All basis choices are deterministic (greedy pivot complements, zero free
variables in preimage solves), so block data is reproducible run to run.
"""

from __future__ import annotations

from typing import Mapping

from .complexes import ChainComplex, ChainEndomorphism, validate_chain_map, validate_complex
from .errors import BlockStructureError
from .linalg import complement_basis, image_basis, inverse, is_invertible, kernel_basis, solve_linear
from .matrices import Matrix, block_matrix, hstack, split_blocks

_UPPER_POSITIONS = {(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)}


class Splitting:
    """Per-degree change of basis realizing the standard form."""

    def __init__(
        self,
        complex: ChainComplex,
        block_dims: Mapping[int, tuple[int, int, int]],
        basis: Mapping[int, Matrix],
    ):
        self.complex = complex
        self._block_dims = dict(block_dims)
        self._basis = dict(basis)
        self._inverse = {i: inverse(m) for i, m in self._basis.items()}

    def block_dims(self, degree: int) -> tuple[int, int, int]:
        """(boundary, cohomology, next boundary) dimensions at one degree."""
        return self._block_dims.get(degree, (0, 0, 0))

    def boundary_dim(self, degree: int) -> int:
        """dim B_degree = rank of the incoming differential."""
        if degree in self._block_dims:
            return self._block_dims[degree][0]
        if degree == self.complex.hi + 1:
            return self._block_dims[self.complex.hi][2]
        return 0

    def cohomology_dim(self, degree: int) -> int:
        return self.block_dims(degree)[1]

    def basis(self, degree: int) -> Matrix:
        """Columns: chosen basis of V_degree (identity of size 0 off-window)."""
        return self._basis.get(degree, Matrix.identity(self.complex.field, self.complex.dim(degree)))

    def inverse_basis(self, degree: int) -> Matrix:
        return self._inverse.get(degree, Matrix.identity(self.complex.field, self.complex.dim(degree)))

    def to_split(self, degree: int, endo_map: Matrix) -> Matrix:
        """Conjugate a V_degree endomorphism matrix into split coordinates."""
        return self.inverse_basis(degree) * endo_map * self.basis(degree)

    def from_split(self, degree: int, split_map: Matrix) -> Matrix:
        return self.basis(degree) * split_map * self.inverse_basis(degree)

    def standard_differential(self, degree: int) -> Matrix:
        """The split-coordinate differential out of ``degree``: identity in
        block (0, 2), zero elsewhere."""
        field = self.complex.field
        row_sizes = self.block_dims(degree + 1)
        col_sizes = self.block_dims(degree)
        corner = Matrix.identity(field, col_sizes[2])
        if row_sizes[0] != col_sizes[2]:
            raise BlockStructureError(
                f"inconsistent boundary dimensions between degrees {degree} and {degree + 1}"
            )
        return block_matrix(field, row_sizes, col_sizes, {(0, 2): corner})


class BlockData:
    """A chain endomorphism expressed in split coordinates.

    Stores the full conjugated matrix per degree; the 3x3 block grid at
    degree i has row/column sizes (b_i, h_i, b_{i+1}).  Upper-triangularity
    and the cross-degree identity "block (2,2) at degree i equals block
    (0,0) at degree i+1" are enforced at construction.
    """

    def __init__(self, splitting: Splitting, split_maps: Mapping[int, Matrix]):
        c = splitting.complex
        self.splitting = splitting
        self._split_maps = {i: split_maps[i] for i in c.degrees}
        self._grids: dict[int, dict[tuple[int, int], Matrix]] = {}
        for i in c.degrees:
            m = self._split_maps[i]
            if m.shape != (c.dim(i), c.dim(i)):
                raise ValueError(f"split map at degree {i} has shape {m.shape}")
            sizes = splitting.block_dims(i)
            self._grids[i] = split_blocks(m, sizes, sizes)
        self._check_structure()

    @classmethod
    def from_blocks(
        cls, splitting: Splitting, blocks: Mapping[int, Mapping[tuple[int, int], Matrix]]
    ) -> "BlockData":
        """Build from sparse upper-triangular block grids (missing blocks zero)."""
        c = splitting.complex
        field = c.field
        split_maps = {}
        for i in c.degrees:
            given = dict(blocks.get(i, {}))
            bad = set(given) - _UPPER_POSITIONS
            if bad:
                raise ValueError(f"blocks below the diagonal are not allowed: {sorted(bad)}")
            sizes = splitting.block_dims(i)
            split_maps[i] = block_matrix(field, sizes, sizes, given)
        return cls(splitting, split_maps)

    def _check_structure(self) -> None:
        c = self.splitting.complex
        for i in c.degrees:
            for pos in ((1, 0), (2, 0), (2, 1)):
                if not self._grids[i][pos].is_zero():
                    raise BlockStructureError(
                        f"nonzero lower block {pos} at degree {i}: not a chain map in split coordinates"
                    )
        for i in range(c.lo, c.hi):
            if self._grids[i][(2, 2)] != self._grids[i + 1][(0, 0)]:
                raise BlockStructureError(
                    f"boundary blocks disagree between degrees {i} and {i + 1}"
                )

    def split_map(self, degree: int) -> Matrix:
        return self._split_maps[degree]

    def block(self, degree: int, row: int, col: int) -> Matrix:
        return self._grids[degree][(row, col)]

    def boundary_block(self, degree: int) -> Matrix:
        """The action on B_degree (empty for off-window or end degrees)."""
        c = self.splitting.complex
        if c.lo <= degree <= c.hi:
            return self._grids[degree][(0, 0)]
        if degree == c.hi + 1:
            return self._grids[c.hi][(2, 2)]
        return Matrix.zeros(c.field, 0, 0)

    def cohomology_block(self, degree: int) -> Matrix:
        c = self.splitting.complex
        if c.lo <= degree <= c.hi:
            return self._grids[degree][(1, 1)]
        return Matrix.zeros(c.field, 0, 0)


def split_complex(c: ChainComplex) -> Splitting:
    """Choose the standard-form bases for a valid complex.

    Construction per degree: boundary basis = pivot columns of the incoming
    differential; extend to a basis of the cocycles (the new columns lift
    cohomology); extend to a full basis by preimages of the chosen boundary
    basis one degree up.  The conjugated differentials are asserted to equal
    the standard corner matrix exactly.
    """
    problems = validate_complex(c)
    if problems:
        raise ValueError("cannot split an invalid complex: " + "; ".join(problems))
    field = c.field

    boundary_bases = {i: image_basis(c.differential(i - 1)) for i in range(c.lo, c.hi + 2)}
    block_dims: dict[int, tuple[int, int, int]] = {}
    basis: dict[int, Matrix] = {}
    for i in c.degrees:
        boundaries = boundary_bases[i]
        cocycles = kernel_basis(c.differential(i))
        lifts = complement_basis(boundaries, cocycles)
        next_boundaries = boundary_bases[i + 1]
        preimages = solve_linear(c.differential(i), next_boundaries)
        if preimages is None:
            raise BlockStructureError(f"no preimage of the boundary basis at degree {i}")
        p = hstack([boundaries, lifts, preimages])
        if not is_invertible(p):
            raise BlockStructureError(f"chosen basis at degree {i} is not invertible")
        block_dims[i] = (boundaries.cols, lifts.cols, next_boundaries.cols)
        basis[i] = p

    s = Splitting(c, block_dims, basis)
    for i in range(c.lo - 1, c.hi + 1):
        conjugated = s.inverse_basis(i + 1) * c.differential(i) * s.basis(i)
        if conjugated != s.standard_differential(i):
            raise BlockStructureError(f"conjugated differential at degree {i} is not in standard form")
    return s


def extract_blocks(phi: ChainEndomorphism, s: Splitting) -> BlockData:
    """Conjugate a chain endomorphism into split coordinates and cut it into
    blocks; the lower blocks must vanish (they do for genuine chain maps)."""
    if phi.complex != s.complex:
        raise ValueError("endomorphism and splitting live on different complexes")
    return BlockData(s, {i: s.to_split(i, phi.map(i)) for i in s.complex.degrees})


def assemble(blocks: BlockData) -> ChainEndomorphism:
    """Inverse of :func:`extract_blocks`; the result is always a chain map."""
    s = blocks.splitting
    c = s.complex
    phi = ChainEndomorphism(c, [s.from_split(i, blocks.split_map(i)) for i in c.degrees])
    problems = validate_chain_map(phi)
    if problems:
        raise BlockStructureError("assembled endomorphism is not a chain map: " + "; ".join(problems))
    return phi
