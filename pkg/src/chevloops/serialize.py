"""JSON wire formats: ring descriptors, scalars, matrices, paths, words,
simplices, and abelian-group presentations.

Ring descriptors form one flat namespace across all subcommands:
``Q``, ``Fq:<p>^<e>``, and ``poly:<base>:<v1,v2,...>``.  Rationals are
encoded as decimal strings ("num/den"), finite-field elements as
little-endian coefficient vectors, and polynomials as lists of
[exponent-vector, coefficient] pairs in a fixed order, so identical
values always serialize to identical documents.
"""

from __future__ import annotations

from fractions import Fraction

from .chevalley import GroupMatrix
from .loops import PathMatrix
from .oracles import AbelianGroupPresentation
from .rings import GF, FiniteField, Poly, PolyRing, QQ
from .simplicial import SimplexMatrix, SimplexPoly, simplex_ring
from .snf import SparseIntMatrix
from .steinberg import SteinbergWord

SCHEMA_MATRIX = "chevloops/matrix/v1"
SCHEMA_PATH = "chevloops/path/v1"
SCHEMA_WORD = "chevloops/word/v1"
SCHEMA_SIMPLEX_POLY = "chevloops/simplex-poly/v1"
SCHEMA_SIMPLEX_MATRIX = "chevloops/simplex-matrix/v1"
SCHEMA_PRESENTATION = "chevloops/presentation/v1"
SCHEMA_GENERATORS = "chevloops/generators/v1"


# ---------------------------------------------------------------------------
# ring descriptors
# ---------------------------------------------------------------------------

def format_ring(ring) -> str:
    return ring.descriptor()


def parse_ring(desc: str):
    if not isinstance(desc, str):
        raise ValueError(f"ring descriptor must be a string, got {desc!r}")
    if desc == "Q":
        return QQ
    if desc.startswith("Fq:"):
        body = desc[3:]
        if "^" in body:
            p_str, e_str = body.split("^", 1)
        else:
            p_str, e_str = body, "1"
        try:
            p, e = int(p_str), int(e_str)
        except ValueError:
            raise ValueError(f"bad finite-field descriptor {desc!r}")
        field = GF(p ** e)
        if field.p != p:
            raise ValueError(f"{p} is not prime in descriptor {desc!r}")
        return field
    if desc.startswith("poly:"):
        rest = desc[5:]
        if ":" not in rest:
            raise ValueError(f"bad polynomial-ring descriptor {desc!r}")
        base_desc, vars_part = rest.rsplit(":", 1)
        base = parse_ring(base_desc)
        if isinstance(base, PolyRing):
            raise ValueError("nested polynomial rings are not supported; "
                             "declare all variables in one descriptor")
        names = tuple(v for v in vars_part.split(",") if v)
        if not names:
            raise ValueError(f"no variables in descriptor {desc!r}")
        return PolyRing(base, names)
    raise ValueError(f"unknown ring descriptor {desc!r}")


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

def scalar_to_json(ring, x):
    if ring is QQ:
        return str(ring(x))
    if isinstance(ring, FiniteField):
        return list(ring(x).coeffs)
    if isinstance(ring, PolyRing):
        p = ring(x)
        base = ring.base
        return [[list(e), scalar_to_json(base, c)]
                for e, c in sorted(p.terms.items(), reverse=True)]
    raise ValueError(f"cannot serialize over {ring!r}")


def scalar_from_json(ring, doc):
    if ring is QQ:
        if isinstance(doc, (str, int)):
            return Fraction(str(doc))
        raise ValueError(f"bad rational encoding {doc!r}")
    if isinstance(ring, FiniteField):
        if isinstance(doc, int):
            return ring(doc)
        if isinstance(doc, list):
            return ring(doc)
        raise ValueError(f"bad finite-field encoding {doc!r}")
    if isinstance(ring, PolyRing):
        if not isinstance(doc, list):
            raise ValueError(f"bad polynomial encoding {doc!r}")
        nvars = len(ring.variables)
        terms = {}
        for item in doc:
            if not (isinstance(item, list) and len(item) == 2):
                raise ValueError(f"bad polynomial term {item!r}")
            exp, coeff = item
            if not (isinstance(exp, list) and len(exp) == nvars
                    and all(isinstance(k, int) and k >= 0 for k in exp)):
                raise ValueError(f"bad exponent vector {exp!r}")
            terms[tuple(exp)] = scalar_from_json(ring.base, coeff)
        return Poly(ring, terms)
    raise ValueError(f"cannot deserialize over {ring!r}")


# ---------------------------------------------------------------------------
# matrices and paths
# ---------------------------------------------------------------------------

def matrix_to_json(m: GroupMatrix, schema: str = SCHEMA_MATRIX) -> dict:
    return {
        "schema": schema,
        "n": m.n,
        "ring": format_ring(m.ring),
        "entries": [[scalar_to_json(m.ring, x) for x in row]
                    for row in m.rows],
    }


def matrix_from_json(doc: dict) -> GroupMatrix:
    ring = parse_ring(doc["ring"])
    n = doc["n"]
    entries = doc["entries"]
    if not (isinstance(entries, list) and len(entries) == n):
        raise ValueError("entry grid does not match declared size")
    rows = []
    for row in entries:
        if not (isinstance(row, list) and len(row) == n):
            raise ValueError("entry grid does not match declared size")
        rows.append([scalar_from_json(ring, x) for x in row])
    return GroupMatrix(ring, rows)


def path_to_json(path: PathMatrix) -> dict:
    return matrix_to_json(path.matrix, schema=SCHEMA_PATH)


def path_from_json(doc: dict) -> PathMatrix:
    return PathMatrix(matrix_from_json(doc))


# ---------------------------------------------------------------------------
# Steinberg words
# ---------------------------------------------------------------------------

def word_to_json(w: SteinbergWord) -> dict:
    return {
        "schema": SCHEMA_WORD,
        "n": w.n,
        "ring": format_ring(w.ring),
        "letters": [[i, j, scalar_to_json(w.ring, param), 1]
                    for (i, j), param in w.letters],
    }


def word_from_json(doc: dict) -> SteinbergWord:
    ring = parse_ring(doc["ring"])
    letters = []
    for item in doc["letters"]:
        if not (isinstance(item, list) and len(item) in (3, 4)):
            raise ValueError(f"bad word letter {item!r}")
        i, j, param = item[0], item[1], item[2]
        sign = item[3] if len(item) == 4 else 1
        letters.append(((i, j), scalar_from_json(ring, param), sign))
    return SteinbergWord(ring, doc["n"], letters)


# ---------------------------------------------------------------------------
# simplices
# ---------------------------------------------------------------------------

def simplex_poly_to_json(sp: SimplexPoly) -> dict:
    ring = simplex_ring(sp.field, sp.level)
    return {
        "schema": SCHEMA_SIMPLEX_POLY,
        "level": sp.level,
        "field": format_ring(sp.field),
        "poly": scalar_to_json(ring, sp.poly),
    }


def simplex_poly_from_json(doc: dict) -> SimplexPoly:
    field = parse_ring(doc["field"])
    level = doc["level"]
    ring = simplex_ring(field, level)
    return SimplexPoly(field, level, scalar_from_json(ring, doc["poly"]))


def simplex_matrix_to_json(sm: SimplexMatrix) -> dict:
    ring = simplex_ring(sm.field, sm.level)
    return {
        "schema": SCHEMA_SIMPLEX_MATRIX,
        "level": sm.level,
        "n": sm.n,
        "field": format_ring(sm.field),
        "entries": [[scalar_to_json(ring, x) for x in row]
                    for row in sm.matrix.rows],
    }


def simplex_matrix_from_json(doc: dict) -> SimplexMatrix:
    field = parse_ring(doc["field"])
    level = doc["level"]
    ring = simplex_ring(field, level)
    n = doc["n"]
    rows = [[scalar_from_json(ring, x) for x in row]
            for row in doc["entries"]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("entry grid does not match declared size")
    return SimplexMatrix(field, level, GroupMatrix(ring, rows))


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------

def presentation_to_json(p: AbelianGroupPresentation) -> dict:
    rel = p.relations
    return {
        "schema": SCHEMA_PRESENTATION,
        "generators": list(p.generators),
        "relations": {
            "nrows": rel.nrows,
            "ncols": rel.ncols,
            "entries": sorted([i, j, v] for (i, j), v in rel.entries.items()),
        },
        "snf_diagonal": list(p.snf_diagonal),
        "invariant_factors": list(p.invariant_factors),
        "free_rank": p.free_rank,
        "metadata": dict(p.metadata),
    }


def sparse_matrix_from_json(doc: dict) -> SparseIntMatrix:
    return SparseIntMatrix(doc["nrows"], doc["ncols"],
                           [(i, j, v) for i, j, v in doc["entries"]])
