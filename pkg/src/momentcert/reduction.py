"""Polytope-level symplectic reduction along integral affine sections.

A reduction is written as the section y -> A y + x0 from the reduced
coordinates into the ambient ones, the way worked substitutions like
"x3 = x1 + x2" are usually given.  The subtorus being quotiented is
recoverable as the integral kernel of A^T.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lattice
from .errors import (
    NonPrimitiveImageError,
    NotCompactError,
    NotDelzantError,
    SliceError,
    SliceOutsidePolytopeError,
)
from .lattice import IntMat, IntVec, RatVec
from .polytope import Facet, Polytope, _prune_facet_list, polytope


@dataclass(frozen=True)
class AffineReduction:
    """The section (matrix, base): reduced point y sits at matrix @ y + base."""

    matrix: IntMat
    base: RatVec

    def __post_init__(self):
        rows = len(self.matrix)
        cols = len(self.matrix[0]) if rows else 0
        if any(len(r) != cols for r in self.matrix):
            raise SliceError("ragged section matrix")
        if len(self.base) != rows:
            raise SliceError("base point length must match the ambient dimension")
        if lattice.rank_exact(self.matrix) != cols:
            raise SliceError("section matrix must have independent columns")
        if not lattice.is_surjective_onto_lattice(self.matrix):
            raise SliceError(
                "transpose of the section matrix must map onto the reduced lattice"
            )

    @property
    def ambient_dim(self) -> int:
        return len(self.matrix)

    @property
    def reduced_dim(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def map_point(self, y) -> RatVec:
        return tuple(
            lattice.dot(row, y) + b for row, b in zip(self.matrix, self.base, strict=True)
        )

    def preimage(self, x) -> RatVec | None:
        """The unique y with map_point(y) = x, or None if x is off the slice."""
        rhs = [Fraction(xi) - bi for xi, bi in zip(x, self.base, strict=True)]
        sol = lattice.solve_exact(self.matrix, rhs)
        if sol is None:
            return None
        return sol[0]

    def compose(self, inner: AffineReduction) -> AffineReduction:
        """The section equal to applying inner first, then self."""
        if inner.ambient_dim != self.reduced_dim:
            raise SliceError("section dimensions do not chain")
        mat = lattice.mat_mul(self.matrix, inner.matrix)
        base = tuple(
            a + b for a, b in zip(lattice.mat_vec(self.matrix, inner.base), self.base)
        )
        return AffineReduction(mat, base)

    def subtorus_generators(self) -> tuple[IntVec, ...]:
        """Integral basis of the kernel of A^T: the Lie algebra directions of
        the quotiented subtorus.  Smith form makes the basis saturated, so it
        generates the kernel lattice, not just a finite-index sublattice."""
        transposed = lattice.transpose(self.matrix)
        _, _, v = lattice.smith_normal_form(transposed)
        cols = lattice.transpose(v)
        return tuple(cols[j] for j in range(self.reduced_dim, self.ambient_dim))

    def levels(self) -> tuple[Fraction, ...]:
        """The value <x, k> shared by every slice point, per subtorus
        generator k; the reduction happens at these levels."""
        return tuple(lattice.dot(self.base, k) for k in self.subtorus_generators())


def section(rows, base=None) -> AffineReduction:
    """Convenience constructor coercing rows/base to exact tuples."""
    mat = tuple(tuple(int(x) for x in row) for row in rows)
    if base is None:
        base = (Fraction(0),) * len(mat)
    return AffineReduction(mat, tuple(Fraction(b) for b in base))


def reduce_polytope(ambient: Polytope, sec: AffineReduction) -> Polytope:
    """Express the ambient facets in the reduced coordinates of the section.

    Facet (nu, a) maps to (A^T nu, a + <x0, nu>).  A zero image means the
    facet is parallel to the slice: harmless if its clearance is positive,
    fatal otherwise.  Non-primitive images signal a slice that does not
    respect the lattice.  The surviving list is pruned and canonicalized.
    """
    if sec.ambient_dim != ambient.dim:
        raise SliceError(
            f"section lives in dimension {sec.ambient_dim}, polytope in {ambient.dim}"
        )
    cols = lattice.transpose(sec.matrix)
    raw = []
    for nu, a in ambient.facets:
        image = tuple(lattice.dot(col, nu) for col in cols)
        clearance = a + lattice.dot(sec.base, nu)
        if all(x == 0 for x in image):
            if clearance <= 0:
                raise SliceOutsidePolytopeError(
                    f"slice misses the interior: facet {nu} has clearance {clearance}"
                )
            continue
        if not lattice.is_primitive(image):
            raise NonPrimitiveImageError(f"facet {nu} maps to non-primitive {image}")
        raw.append(Facet(image, clearance))
    kept = _prune_facet_list(sec.reduced_dim, raw)
    return Polytope(sec.reduced_dim, tuple(sorted(kept)))


# -- standard models ----------------------------------------------------------

def simplex(n: int, offset=1) -> Polytope:
    """x_j + offset >= 0 for each j, and -(sum x_j) + offset >= 0."""
    facets = [(tuple(int(i == j) for i in range(n)), offset) for j in range(n)]
    facets.append(((-1,) * n, offset))
    return polytope(n, facets)


def weighted_projective(weights, offset=1) -> Polytope:
    """x_j + offset >= 0 for each j, and -(sum m_j x_j) + offset >= 0.

    weights = (1, m_1, ..., m_n) with the leading entry 1; the trailing
    weights tilt the slanted facet.
    """
    weights = tuple(int(w) for w in weights)
    if not weights or weights[0] != 1:
        raise ValueError("weights must start with 1")
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive")
    n = len(weights) - 1
    facets = [(tuple(int(i == j) for i in range(n)), offset) for j in range(n)]
    facets.append((tuple(-w for w in weights[1:]), offset))
    return polytope(n, facets)


def cp1(a1=1, a2=1) -> Polytope:
    """The segment x + a1 >= 0, -x + a2 >= 0."""
    return polytope(1, [((1,), a1), ((-1,), a2)])


def o_minus_one(a1=1, a2=1, a3=1) -> Polytope:
    """The unbounded wedge with normals (1,0), (0,1), (1,1)."""
    return polytope(2, [((1, 0), a1), ((0, 1), a2), ((1, 1), a3)])


def cube(n: int, offset=1) -> Polytope:
    """+-x_j + offset >= 0 for each j."""
    facets = []
    for j in range(n):
        e = tuple(int(i == j) for i in range(n))
        facets.append((e, offset))
        facets.append((tuple(-x for x in e), offset))
    return polytope(n, facets)


# -- the weight-finding lemma -------------------------------------------------

@dataclass(frozen=True)
class WeightVector:
    """Positive weights with sum(m_j nu_j) = 0 and m_pivot = 1."""

    weights: tuple[int, ...]
    pivot: int | None


def vertex_cone_coords(p: Polytope, target: IntVec):
    """A vertex whose normal cone contains target with nonnegative coordinates.

    Coordinates are taken in the basis of the vertex's active normals and are
    automatically integral for a Delzant polytope.  Vertices are scanned in
    coordinate order and the first admissible one wins.  Returns
    (vertex, coeffs) with coeffs aligned to the sorted active indices, or
    None if no vertex cone contains the target.
    """
    if not p.is_compact():
        raise NotCompactError("vertex cones only cover the whole space for compact polytopes")
    if not p.is_delzant():
        raise NotDelzantError("vertex normals must form Z-bases")
    for vertex in p.vertices():
        active = sorted(vertex.active)
        rows = lattice.transpose([p.facets[i].normal for i in active])
        sol = lattice.solve_exact(rows, target)
        if sol is None or sol[1]:
            continue
        coeffs = sol[0]
        if any(c.denominator != 1 for c in coeffs):
            raise NotDelzantError(f"non-integral cone coordinates at vertex {vertex.point}")
        if all(c >= 0 for c in coeffs):
            return vertex, tuple(int(c) for c in coeffs)
    return None


def monotone_weights(p: Polytope) -> WeightVector:
    """Positive integers m with nu_k + sum_{j != k} m_j nu_j = 0.

    Indices refer to the canonical facet order of p.  When the plain normal
    sum already vanishes the answer is all ones with the last facet as
    pivot; otherwise the deficit -sum(nu_j) is expressed in the first
    admissible vertex cone and the pivot is the last facet with weight 1.
    """
    canon = p.canonical_form()
    if not canon.is_compact():
        raise NotCompactError("weights exist only for compact polytopes")
    if not canon.is_delzant():
        raise NotDelzantError("weights exist only for Delzant polytopes")
    n = canon.dim
    total = tuple(sum(nu[i] for nu in canon.normals) for i in range(n))
    if all(x == 0 for x in total):
        return WeightVector((1,) * canon.d, canon.d - 1)
    hit = vertex_cone_coords(canon, lattice.neg(total))
    if hit is None:
        raise NotCompactError("normal fan does not cover the target direction")
    vertex, coeffs = hit
    weights = [1] * canon.d
    for idx, c in zip(sorted(vertex.active), coeffs):
        weights[idx] += c
    pivot = max(i for i, m in enumerate(weights) if m == 1)
    result = WeightVector(tuple(weights), pivot)
    balance = tuple(
        sum(m * nu[i] for m, nu in zip(result.weights, canon.normals)) for i in range(n)
    )
    if any(x != 0 for x in balance):
        raise NotDelzantError("internal error: weight identity failed")
    return result
