"""Machine-checkable non-displaceability certificates.

A certificate is a tree: leaves are axiomatized base facts about model
polytopes (with citations into the literature), inner nodes are cartesian
products and centered reductions.  Verification walks the tree bottom-up,
recomputing every polytope, marked point and intersection bound exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from . import lattice
from .errors import (
    BoundNotIntegralError,
    MarkedPointMismatchError,
    ModelMismatchError,
    NotCompactError,
    NotDelzantError,
    NotMonotoneError,
    ReducedPolytopeMismatchError,
    UnsupportedClaimError,
)
from .floer import hf
from .lattice import IntMat, RatVec
from .polytope import Facet, Polytope, equidistant_point, match_dilate_translate, product
from .reduction import (
    AffineReduction,
    monotone_weights,
    reduce_polytope,
    simplex,
    cp1,
    o_minus_one,
    weighted_projective,
)

# claim kinds
TT = "TT"  # torus fiber against its own Hamiltonian images
TR = "TR"  # torus fiber against the real locus

# base fact kinds
CLIFFORD_TORUS = "clifford_torus"
WEIGHTED_PROJECTIVE = "weighted_projective"
CP1 = "cp1"
O_MINUS_ONE = "o_minus_one"

BASE_KINDS = (CLIFFORD_TORUS, WEIGHTED_PROJECTIVE, CP1, O_MINUS_ONE)

CITATIONS = {
    (CLIFFORD_TORUS, TT): (
        "Clifford torus of CP^n: self-intersection bound 2^n "
        "(Biran-Entov-Polterovich; Cho)."
    ),
    (CLIFFORD_TORUS, TR): (
        "Clifford torus against RP^(2k-1) in CP^(2k-1): bound 2^k (Alston)."
    ),
    (WEIGHTED_PROJECTIVE, TT): (
        "Centered fiber of CP(1,m_1,...,m_n): self-intersection bound 2^n "
        "(Woodward; Cho-Poddar)."
    ),
    (CP1, TT): "Equator of the sphere: self-intersection bound 2.",
    (CP1, TR): "Equator against a meridian of the sphere: bound 2.",
    (O_MINUS_ONE, TT): (
        "Central fiber of the line bundle O(-1) over the sphere: bound 4 "
        "(Woodward; Cho)."
    ),
}

PRODUCT_HYPOTHESIS = (
    "Cartesian products preserve non-displaceability of torus fibers and "
    "torus/real-locus pairs (assumed; cf. Woodward, Wehrheim-Woodward)."
)

TR_CAVEAT = (
    "Interpreting the invariant as an intersection bound against the real "
    "locus assumes the Lagrangian Floer pairing is well defined (minimal "
    "Maslov number of the real locus above two, or a framework that "
    "dispenses with it)."
)


@dataclass(frozen=True)
class BaseFact:
    """An axiom leaf: a dilated/translated model with a marked center fiber."""

    kind: str
    claim: str
    instance: Polytope
    weights: tuple[int, ...] | None = None
    basis_change: IntMat | None = None


@dataclass(frozen=True)
class Product:
    children: tuple  # of nodes


@dataclass(frozen=True)
class Reduction:
    child: object
    section: AffineReduction
    target: Polytope | None = None


@dataclass(frozen=True)
class Certificate:
    root: object
    kind: str
    marked_point: RatVec | None = None
    target: Polytope | None = None
    name: str = ""


@dataclass(frozen=True)
class VerifiedClaim:
    polytope: Polytope  # canonical form
    marked_point: RatVec
    kind: str
    bound: int
    citations: tuple[str, ...] = ()
    hypotheses: tuple[str, ...] = ()


def _model_and_bound(fact: BaseFact) -> tuple[Polytope, int]:
    n = fact.instance.dim
    if fact.kind == CLIFFORD_TORUS:
        if fact.claim == TT:
            return simplex(n), 2**n
        if n % 2 == 1:
            return simplex(n), 2 ** ((n + 1) // 2)
        raise UnsupportedClaimError(
            "real-locus bound for the Clifford torus needs odd dimension"
        )
    if fact.kind == WEIGHTED_PROJECTIVE:
        if fact.claim != TT:
            raise UnsupportedClaimError("no real-locus fact for weighted projective models")
        if fact.weights is None or len(fact.weights) != n + 1:
            raise ModelMismatchError(f"weighted model needs {n + 1} weights")
        return weighted_projective(fact.weights), 2**n
    if fact.kind == CP1:
        if n != 1:
            raise ModelMismatchError("the sphere model is 1-dimensional")
        return cp1(), 2
    if fact.kind == O_MINUS_ONE:
        if fact.claim != TT:
            raise UnsupportedClaimError("no real-locus fact for the O(-1) model")
        if n != 2:
            raise ModelMismatchError("the O(-1) model is 2-dimensional")
        return o_minus_one(), 4
    raise UnsupportedClaimError(f"unknown base fact kind {fact.kind!r}")


def _apply_basis_change(p: Polytope, change: IntMat) -> Polytope:
    if len(change) != p.dim or any(len(r) != p.dim for r in change):
        raise ModelMismatchError("basis change must be a square matrix of the right size")
    if abs(lattice.det_exact(change)) != 1:
        raise ModelMismatchError("basis change must be unimodular")
    facets = tuple(Facet(lattice.mat_vec(change, f.normal), f.offset) for f in p.facets)
    return Polytope(p.dim, facets)


def _verify_leaf(fact: BaseFact) -> VerifiedClaim:
    if fact.claim not in (TT, TR):
        raise UnsupportedClaimError(f"unknown claim kind {fact.claim!r}")
    model, bound = _model_and_bound(fact)
    shape = fact.instance
    if fact.basis_change is not None:
        shape = _apply_basis_change(shape, fact.basis_change)
    center = equidistant_point(fact.instance)
    if center is None:
        raise MarkedPointMismatchError("base fact instance has no equidistant center")
    fit = match_dilate_translate(shape, model)
    if fit is None:
        raise ModelMismatchError(
            f"instance is not a dilated translate of the {fact.kind} model"
        )
    return VerifiedClaim(
        polytope=fact.instance.canonical_form(),
        marked_point=center[0],
        kind=fact.claim,
        bound=bound,
        citations=(CITATIONS[(fact.kind, fact.claim)],),
    )


def _verify_product(node: Product) -> VerifiedClaim:
    if not node.children:
        raise UnsupportedClaimError("empty product node")
    claims = [_verify_node(c) for c in node.children]
    kind = claims[0].kind
    if any(c.kind != kind for c in claims):
        raise UnsupportedClaimError("product factors must share a claim kind")
    poly = claims[0].polytope
    point = claims[0].marked_point
    bound = claims[0].bound
    for c in claims[1:]:
        poly = product(poly, c.polytope)
        point = point + c.marked_point
        bound *= c.bound
    citations = _merge(c.citations for c in claims)
    hypotheses = _merge([c.hypotheses for c in claims] + [(PRODUCT_HYPOTHESIS,)])
    return VerifiedClaim(poly.canonical_form(), point, kind, bound, citations, hypotheses)


def _verify_reduction(node: Reduction) -> VerifiedClaim:
    child = _verify_node(node.child)
    reduced = reduce_polytope(child.polytope, node.section)
    preimage = node.section.preimage(child.marked_point)
    if preimage is None:
        raise MarkedPointMismatchError(
            "slice does not pass through the marked fiber of the child claim"
        )
    if not reduced.interior_contains(preimage):
        raise MarkedPointMismatchError("reduced marked point fell out of the interior")
    if node.target is not None and node.target.canonical_form() != reduced:
        raise ReducedPolytopeMismatchError(
            f"computed reduction differs from the declared target:\n"
            f"  computed: {_describe(reduced)}\n"
            f"  declared: {_describe(node.target.canonical_form())}"
        )
    drop = node.section.ambient_dim - node.section.reduced_dim
    denom = 2**drop
    if child.bound % denom != 0:
        raise BoundNotIntegralError(
            f"bound {child.bound} is not divisible by 2^{drop}"
        )
    return replace(
        child,
        polytope=reduced,
        marked_point=preimage,
        bound=child.bound // denom,
    )


def _verify_node(node) -> VerifiedClaim:
    if isinstance(node, BaseFact):
        return _verify_leaf(node)
    if isinstance(node, Product):
        return _verify_product(node)
    if isinstance(node, Reduction):
        return _verify_reduction(node)
    raise UnsupportedClaimError(f"unknown certificate node {type(node).__name__}")


def verify(cert: Certificate) -> VerifiedClaim:
    """Check every node of the certificate and return the verified claim.

    Deterministic and exact; any discrepancy raises a VerificationError
    subclass naming the failing check.
    """
    claim = _verify_node(cert.root)
    if cert.kind != claim.kind:
        raise UnsupportedClaimError(
            f"certificate declares kind {cert.kind}, tree proves {claim.kind}"
        )
    if cert.marked_point is not None and tuple(cert.marked_point) != tuple(claim.marked_point):
        raise MarkedPointMismatchError(
            f"declared marked point {cert.marked_point} differs from computed "
            f"{claim.marked_point}"
        )
    if cert.target is not None and cert.target.canonical_form() != claim.polytope:
        raise ReducedPolytopeMismatchError(
            f"final polytope differs from the declared target:\n"
            f"  computed: {_describe(claim.polytope)}\n"
            f"  declared: {_describe(cert.target.canonical_form())}"
        )
    return claim


def auto_certify_monotone(p: Polytope) -> Certificate:
    """Certify the center fiber of a compact monotone Delzant polytope.

    The weight lemma writes one normal as a negative combination of the
    others; the certificate then exhibits p as a centered reduction of the
    weighted projective model with those weights, dilated to the common
    offset.
    """
    canon = p.canonical_form()
    if not canon.is_compact():
        raise NotCompactError("automatic certification needs a compact polytope")
    if not canon.is_delzant():
        raise NotDelzantError("automatic certification needs a Delzant polytope")
    lam = canon.is_monotone()
    if lam is None:
        raise NotMonotoneError("automatic certification needs equal positive offsets")
    wv = monotone_weights(canon)
    k = wv.pivot
    leaf_weights = (1,) + tuple(m for i, m in enumerate(wv.weights) if i != k)
    ambient = weighted_projective(leaf_weights, lam)
    rows = tuple(nu for i, nu in enumerate(canon.normals) if i != k)
    sec = AffineReduction(rows, (Fraction(0),) * len(rows))
    center = equidistant_point(canon)
    if center is None:
        raise NotMonotoneError("monotone polytope lost its center; normals are degenerate")
    root = Reduction(
        child=BaseFact(WEIGHTED_PROJECTIVE, TT, ambient, weights=leaf_weights),
        section=sec,
        target=canon,
    )
    return Certificate(root, TT, marked_point=center[0], target=canon)


def hf_lower_bound_tr(p: Polytope) -> tuple[int, str]:
    """The invariant read as a torus/real-locus intersection bound.

    Returns (bound, caveat): the caveat records the geometric hypothesis
    under which the reading is justified.
    """
    return hf(p), TR_CAVEAT


def _merge(groups) -> tuple[str, ...]:
    out: list[str] = []
    for group in groups:
        for item in group:
            if item not in out:
                out.append(item)
    return tuple(out)


def _describe(p: Polytope) -> str:
    parts = ", ".join(f"{f.normal}:{f.offset}" for f in p.facets)
    return f"dim {p.dim} [{parts}]"
