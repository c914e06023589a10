"""JSON documents for polytopes, sections and certificates.

Rationals travel as exact strings ("5/4") or plain integers; float
literals are rejected so no inexact value can sneak in.  Parse errors
carry the offending file position or document path.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from . import certificate as cert_mod
from .certificate import BaseFact, Certificate, Product, Reduction
from .errors import DocumentError, MomentcertError
from .polytope import Polytope, polytope
from .reduction import AffineReduction, section


def parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(f"{where}: write non-integers as strings like \"5/4\"")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{where}: bad rational {value!r} ({exc})") from None
    raise DocumentError(f"{where}: expected an integer or \"p/q\" string")


def rational_to_json(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _int_list(value, where: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise DocumentError(f"{where}: expected a list of integers")
    return tuple(value)


def _rational_list(value, where: str):
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected a list")
    return tuple(parse_rational(v, f"{where}[{i}]") for i, v in enumerate(value))


def _int_matrix(value, where: str):
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected a matrix (list of rows)")
    return tuple(_int_list(row, f"{where}[{i}]") for i, row in enumerate(value))


# -- polytopes ---------------------------------------------------------------

def polytope_from_doc(doc, where: str = "polytope") -> Polytope:
    if not isinstance(doc, dict):
        raise DocumentError(f"{where}: expected an object")
    if "dim" not in doc or "facets" not in doc:
        raise DocumentError(f"{where}: needs 'dim' and 'facets'")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise DocumentError(f"{where}.dim: expected a nonnegative integer")
    facets = doc["facets"]
    if not isinstance(facets, list):
        raise DocumentError(f"{where}.facets: expected a list")
    pairs = []
    for i, f in enumerate(facets):
        fw = f"{where}.facets[{i}]"
        if not isinstance(f, dict) or "normal" not in f or "offset" not in f:
            raise DocumentError(f"{fw}: needs 'normal' and 'offset'")
        pairs.append((_int_list(f["normal"], f"{fw}.normal"), parse_rational(f["offset"], f"{fw}.offset")))
    try:
        return polytope(dim, pairs)
    except MomentcertError as exc:
        raise DocumentError(f"{where}: {exc}") from exc


def marked_points_from_doc(doc, where: str = "polytope"):
    points = doc.get("marked_points", [])
    if not isinstance(points, list):
        raise DocumentError(f"{where}.marked_points: expected a list")
    return tuple(
        _rational_list(pt, f"{where}.marked_points[{i}]") for i, pt in enumerate(points)
    )


def polytope_to_doc(p: Polytope, name: str = "", citation: str = "", marked_points=()) -> dict:
    doc = {}
    if name:
        doc["name"] = name
    if citation:
        doc["citation"] = citation
    doc["dim"] = p.dim
    doc["facets"] = [
        {"normal": list(f.normal), "offset": rational_to_json(f.offset)} for f in p.facets
    ]
    if marked_points:
        doc["marked_points"] = [[rational_to_json(x) for x in pt] for pt in marked_points]
    return doc


# -- sections ----------------------------------------------------------------

def section_from_doc(doc, where: str = "section") -> AffineReduction:
    if not isinstance(doc, dict) or "A" not in doc:
        raise DocumentError(f"{where}: needs the matrix 'A' (and optional 'x0')")
    mat = _int_matrix(doc["A"], f"{where}.A")
    base = None
    if "x0" in doc:
        base = _rational_list(doc["x0"], f"{where}.x0")
    try:
        return section(mat, base)
    except MomentcertError as exc:
        raise DocumentError(f"{where}: {exc}") from exc


def section_to_doc(sec: AffineReduction) -> dict:
    return {
        "A": [list(row) for row in sec.matrix],
        "x0": [rational_to_json(x) for x in sec.base],
    }


# -- certificates ------------------------------------------------------------

def _node_from_doc(doc, claim_kind: str, where: str):
    if not isinstance(doc, dict):
        raise DocumentError(f"{where}: expected an object")
    if "base" in doc:
        kind = doc["base"]
        if kind not in cert_mod.BASE_KINDS:
            raise DocumentError(f"{where}.base: unknown kind {kind!r}")
        if "instance" not in doc:
            raise DocumentError(f"{where}: base fact needs an 'instance' polytope")
        instance = polytope_from_doc(doc["instance"], f"{where}.instance")
        weights = None
        if "weights" in doc:
            weights = _int_list(doc["weights"], f"{where}.weights")
        basis_change = None
        if "basis_change" in doc:
            basis_change = _int_matrix(doc["basis_change"], f"{where}.basis_change")
        return BaseFact(kind, claim_kind, instance, weights, basis_change)
    if "product" in doc:
        children = doc["product"]
        if not isinstance(children, list) or not children:
            raise DocumentError(f"{where}.product: expected a non-empty list")
        return Product(
            tuple(
                _node_from_doc(c, claim_kind, f"{where}.product[{i}]")
                for i, c in enumerate(children)
            )
        )
    if "reduce" in doc:
        red = doc["reduce"]
        if not isinstance(red, dict) or "child" not in red:
            raise DocumentError(f"{where}.reduce: needs 'A', optional 'x0', and 'child'")
        sec = section_from_doc(red, f"{where}.reduce")
        child = _node_from_doc(red["child"], claim_kind, f"{where}.reduce.child")
        target = None
        if "target" in red:
            target = polytope_from_doc(red["target"], f"{where}.reduce.target")
        return Reduction(child, sec, target)
    raise DocumentError(f"{where}: node must carry 'base', 'product' or 'reduce'")


def certificate_from_doc(doc, where: str = "certificate") -> Certificate:
    if not isinstance(doc, dict):
        raise DocumentError(f"{where}: expected an object")
    claim = doc.get("claim")
    if not isinstance(claim, dict) or claim.get("kind") not in (cert_mod.TT, cert_mod.TR):
        raise DocumentError(f"{where}.claim: needs kind \"TT\" or \"TR\"")
    if "tree" not in doc:
        raise DocumentError(f"{where}: needs a 'tree'")
    kind = claim["kind"]
    marked = None
    if "marked_point" in claim:
        marked = _rational_list(claim["marked_point"], f"{where}.claim.marked_point")
    target = None
    if "target" in claim:
        target = polytope_from_doc(claim["target"], f"{where}.claim.target")
    root = _node_from_doc(doc["tree"], kind, f"{where}.tree")
    return Certificate(root, kind, marked, target, doc.get("name", ""))


def _node_to_doc(node) -> dict:
    if isinstance(node, BaseFact):
        doc = {"base": node.kind, "instance": polytope_to_doc(node.instance)}
        if node.weights is not None:
            doc["weights"] = list(node.weights)
        if node.basis_change is not None:
            doc["basis_change"] = [list(r) for r in node.basis_change]
        return doc
    if isinstance(node, Product):
        return {"product": [_node_to_doc(c) for c in node.children]}
    if isinstance(node, Reduction):
        red = _node_to_doc_section(node)
        return {"reduce": red}
    raise DocumentError(f"cannot serialize node {type(node).__name__}")


def _node_to_doc_section(node: Reduction) -> dict:
    red = section_to_doc(node.section)
    red["child"] = _node_to_doc(node.child)
    if node.target is not None:
        red["target"] = polytope_to_doc(node.target)
    return red


def certificate_to_doc(cert: Certificate) -> dict:
    claim = {"kind": cert.kind}
    if cert.marked_point is not None:
        claim["marked_point"] = [rational_to_json(x) for x in cert.marked_point]
    if cert.target is not None:
        claim["target"] = polytope_to_doc(cert.target)
    doc = {}
    if cert.name:
        doc["name"] = cert.name
    doc["claim"] = claim
    doc["tree"] = _node_to_doc(cert.root)
    return doc


# -- files -------------------------------------------------------------------

def load_json(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"{path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def save_json(path, doc) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def load_polytope(path) -> Polytope:
    return polytope_from_doc(load_json(path), str(path))


def load_section(path_or_inline: str) -> AffineReduction:
    text = str(path_or_inline).strip()
    if text.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"inline section:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
        return section_from_doc(doc, "inline section")
    return section_from_doc(load_json(text), text)


def load_certificate(path) -> Certificate:
    return certificate_from_doc(load_json(path), str(path))
