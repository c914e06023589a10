from fractions import Fraction as F

import pytest

from momentcert.certificate import (
    CLIFFORD_TORUS,
    CP1,
    O_MINUS_ONE,
    TT,
    TR,
    WEIGHTED_PROJECTIVE,
    BaseFact,
    Certificate,
    Product,
    Reduction,
    auto_certify_monotone,
    hf_lower_bound_tr,
    verify,
)
from momentcert.documents import certificate_from_doc, certificate_to_doc
from momentcert.errors import (
    BoundNotIntegralError,
    MarkedPointMismatchError,
    ModelMismatchError,
    NotMonotoneError,
    ReducedPolytopeMismatchError,
    UnsupportedClaimError,
)
from momentcert.polytope import polytope
from momentcert.reduction import cp1, cube, o_minus_one, section, simplex, weighted_projective


def hexagon():
    return polytope(
        2, [((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1), ((1, 1), 1), ((-1, -1), 1)]
    )


def blowup1():
    return polytope(2, [((1, 0), 1), ((0, 1), 1), ((-1, -1), 1), ((1, 1), 1)])


def hexagon_tr_certificate():
    seg = cp1()
    return Certificate(
        Reduction(
            Product((BaseFact(CP1, TR, seg), BaseFact(CP1, TR, seg), BaseFact(CP1, TR, seg))),
            section([(1, 0), (0, 1), (1, 1)]),
            target=hexagon(),
        ),
        TR,
        marked_point=(F(0), F(0)),
        target=hexagon(),
    )


# -- leaves ----------------------------------------------------------------------

def test_clifford_leaf_tt():
    claim = verify(Certificate(BaseFact(CLIFFORD_TORUS, TT, simplex(3)), TT))
    assert claim.bound == 8
    assert claim.marked_point == (0, 0, 0)
    assert claim.citations


def test_clifford_leaf_tr_needs_odd_dimension():
    assert verify(Certificate(BaseFact(CLIFFORD_TORUS, TR, simplex(5)), TR)).bound == 8
    with pytest.raises(UnsupportedClaimError):
        verify(Certificate(BaseFact(CLIFFORD_TORUS, TR, simplex(4)), TR))


def test_tr_unsupported_for_weighted_and_o_minus_one():
    with pytest.raises(UnsupportedClaimError):
        verify(
            Certificate(
                BaseFact(WEIGHTED_PROJECTIVE, TR, weighted_projective((1, 1, 2)), weights=(1, 1, 2)),
                TR,
            )
        )
    with pytest.raises(UnsupportedClaimError):
        verify(Certificate(BaseFact(O_MINUS_ONE, TR, o_minus_one()), TR))


def test_leaf_accepts_dilated_translates():
    a, lam = F(1, 4), F(1, 8)
    claim = verify(Certificate(BaseFact(O_MINUS_ONE, TT, o_minus_one(1, 1 + lam, 1 + a)), TT))
    assert claim.bound == 4
    assert claim.marked_point == (-a + lam, -a)


def test_leaf_rejects_wrong_shape():
    with pytest.raises(ModelMismatchError):
        verify(Certificate(BaseFact(CLIFFORD_TORUS, TT, cube(2)), TT))


def test_leaf_with_basis_change():
    # the simplex sheared by [[1,1],[0,1]] on normals; undo it in the leaf
    sheared = polytope(2, [((1, 0), 1), ((1, 1), 1), ((-2, -1), 1)])
    undo = ((1, -1), (0, 1))
    claim = verify(
        Certificate(BaseFact(CLIFFORD_TORUS, TT, sheared, basis_change=undo), TT)
    )
    assert claim.bound == 4
    assert claim.marked_point == (0, 0)
    with pytest.raises(ModelMismatchError):
        verify(Certificate(BaseFact(CLIFFORD_TORUS, TT, sheared), TT))


def test_basis_change_must_be_unimodular():
    with pytest.raises(ModelMismatchError):
        verify(
            Certificate(
                BaseFact(CLIFFORD_TORUS, TT, simplex(2), basis_change=((2, 0), (0, 1))),
                TT,
            )
        )


# -- inner nodes ------------------------------------------------------------------

def test_product_multiplies_bounds_and_concatenates_points():
    a = F(1, 4)
    node = Product(
        (BaseFact(CP1, TT, cp1(1, 1 - 2 * a)), BaseFact(CLIFFORD_TORUS, TT, simplex(2)))
    )
    claim = verify(Certificate(node, TT))
    assert claim.bound == 2 * 4
    assert claim.marked_point == (-a, 0, 0)
    assert any("product" in h.lower() or "Cartesian" in h for h in claim.hypotheses)


def test_product_rejects_mixed_kinds():
    node = Product((BaseFact(CP1, TT, cp1()), BaseFact(CP1, TR, cp1())))
    with pytest.raises(UnsupportedClaimError):
        verify(Certificate(node, TT))


def test_hexagon_tr_certificate():
    claim = verify(hexagon_tr_certificate())
    assert claim.bound == 4
    assert claim.kind == TR
    assert claim.polytope == hexagon().canonical_form()
    assert claim.marked_point == (0, 0)


def test_hexagon_tr_two_routes():
    # the 5-simplex route only yields the trivial bound 2^3 / 2^3 = 1;
    # the product-of-spheres route improves it to the optimal 4
    hexa = hexagon().canonical_form()
    rows = hexa.normals[:5]
    weak = Certificate(
        Reduction(BaseFact(CLIFFORD_TORUS, TR, simplex(5)), section(rows), target=hexa),
        TR,
        target=hexa,
    )
    assert verify(weak).bound == 1
    assert verify(hexagon_tr_certificate()).bound == 4


def test_auto_certified_hexagon_goes_through_cp5():
    cert = auto_certify_monotone(hexagon())
    leaf = cert.root.child
    assert leaf.weights == (1,) * 6
    assert leaf.instance == simplex(5)
    assert verify(cert).bound == 4


def test_cp2n_tr_certificates():
    # odd-dimensional Clifford fact reduced once: 2^(n+1) / 2
    cert = Certificate(
        Reduction(
            BaseFact(CLIFFORD_TORUS, TR, simplex(5)),
            section([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, -1, -1, -1)]),
            target=simplex(4),
        ),
        TR,
        target=simplex(4),
    )
    assert verify(cert).bound == 4
    cert2 = Certificate(
        Reduction(BaseFact(CLIFFORD_TORUS, TR, simplex(3)), section([(1, 0), (0, 1), (-1, -1)])),
        TR,
    )
    assert verify(cert2).bound == 2


def test_reduction_requires_exact_bound_division():
    # dropping four dimensions from a bound of 8 cannot be divided out
    cert = Certificate(
        Reduction(
            BaseFact(CLIFFORD_TORUS, TR, simplex(5)),
            section([(1,), (0,), (0,), (0,), (-1,)]),
        ),
        TR,
    )
    with pytest.raises(BoundNotIntegralError):
        verify(cert)


def test_reduction_marked_point_must_lie_on_slice():
    # base point shifts the slice off the cube's center fiber
    cert = Certificate(
        Reduction(
            Product((BaseFact(CP1, TT, cp1()), BaseFact(CP1, TT, cp1()), BaseFact(CP1, TT, cp1()))),
            section([(1, 0), (0, 1), (1, 1)], base=(0, 0, F(1, 2))),
        ),
        TT,
    )
    with pytest.raises(MarkedPointMismatchError):
        verify(cert)


def test_reduction_target_mismatch():
    cert = Certificate(
        Reduction(
            BaseFact(CLIFFORD_TORUS, TR, simplex(3)),
            section([(1, 0), (0, 1), (-1, -1)]),
            target=cube(2),
        ),
        TR,
    )
    with pytest.raises(ReducedPolytopeMismatchError):
        verify(cert)


def test_declared_claim_checks():
    cert = hexagon_tr_certificate()
    bad_kind = Certificate(cert.root, TT, cert.marked_point, cert.target)
    with pytest.raises(UnsupportedClaimError):
        verify(bad_kind)
    bad_point = Certificate(cert.root, TR, (F(1), F(0)), cert.target)
    with pytest.raises(MarkedPointMismatchError):
        verify(bad_point)
    bad_target = Certificate(cert.root, TR, cert.marked_point, simplex(2))
    with pytest.raises(ReducedPolytopeMismatchError):
        verify(bad_target)


# -- determinism and round trips -----------------------------------------------------

def test_verification_is_deterministic():
    claim1 = verify(hexagon_tr_certificate())
    claim2 = verify(hexagon_tr_certificate())
    assert claim1 == claim2


def test_serialized_certificate_reverifies_identically():
    cert = hexagon_tr_certificate()
    doc = certificate_to_doc(cert)
    parsed = certificate_from_doc(doc)
    assert verify(parsed) == verify(cert)


# -- automatic certification ----------------------------------------------------------

def test_auto_certify_blowup_goes_through_wp1112():
    cert = auto_certify_monotone(blowup1())
    leaf = cert.root.child
    assert leaf.kind == WEIGHTED_PROJECTIVE
    assert tuple(sorted(leaf.weights)) == (1, 1, 1, 2)
    claim = verify(cert)
    assert claim.bound == 4
    assert claim.marked_point == (0, 0)


def test_auto_certify_simplex_uses_trivial_stage():
    cert = auto_certify_monotone(simplex(2))
    assert verify(cert).bound == 4
    assert cert.root.section.ambient_dim == 2


def test_auto_certify_bounds():
    for p, expected in (
        (cp1(), 2),
        (simplex(3), 8),
        (cube(2), 4),
        (cube(3), 8),
        (hexagon(), 4),
    ):
        assert verify(auto_certify_monotone(p)).bound == expected


def test_auto_certify_respects_dilation():
    assert verify(auto_certify_monotone(simplex(2, 3))).bound == 4


def test_auto_certify_in_random_coordinates():
    # monotone, compact and Delzant survive unimodular coordinate changes,
    # so automatic certification must still deliver 2^n
    import random

    from momentcert.lattice import mat_mul, mat_vec
    from momentcert.polytope import Facet, Polytope

    rng = random.Random(97)
    for base in (simplex(2), cube(2), hexagon(), blowup1(), simplex(3)):
        for _ in range(4):
            n = base.dim
            change = [[int(i == j) for j in range(n)] for i in range(n)]
            for _ in range(6):
                i, j = rng.randrange(n), rng.randrange(n)
                if i == j:
                    continue
                factor = rng.choice((-2, -1, 1, 2))
                change[i] = [a + factor * b for a, b in zip(change[i], change[j])]
            moved = Polytope(
                n,
                tuple(Facet(mat_vec(change, f.normal), f.offset) for f in base.facets),
            )
            assert moved.is_delzant() and moved.is_compact()
            claim = verify(auto_certify_monotone(moved))
            assert claim.bound == 2**n


def test_auto_certify_rejects_non_monotone():
    a = F(1, 4)
    p_alpha = polytope(
        2, [((1, 0), 1), ((0, 1), 1), ((-1, -1), 1), ((1, 1), 1 + a), ((0, -1), 1 - 2 * a)]
    )
    with pytest.raises(NotMonotoneError):
        auto_certify_monotone(p_alpha)


# -- invariant read as a TR bound -----------------------------------------------------

def test_hf_lower_bound_tr():
    bound, caveat = hf_lower_bound_tr(hexagon())
    assert bound == 4 and caveat
    assert hf_lower_bound_tr(simplex(2))[0] == 2
    assert hf_lower_bound_tr(cp1())[0] == 2
