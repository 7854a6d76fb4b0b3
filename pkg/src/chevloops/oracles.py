"""Desk-scale brute-force oracles: tame symbols, Milnor K2 presentations of
finite fields, and bar-resolution Schur multipliers of small matrix groups.

These are deliberately independent of the loop and word layers: the tame
symbol is computed straight from valuations, the K2 presentations feed a
generators-and-relations matrix to exact Smith normal form, and H2 of a
finite group is ker d2 / im d3 of the normalized bar complex with integer
coefficients.  Finite-field groups serve as validation data only.
"""

from __future__ import annotations

from fractions import Fraction

from .chevalley import GroupMatrix
from .snf import SNFResult, SparseIntMatrix, smith_normal_form


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> set[int]:
    """Primes dividing |n| (empty for 0 and +-1)."""
    n = abs(n)
    out: set[int] = set()
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.add(n)
    return out


def _strip_p(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return n, v


def tame_symbol(a, b, p: int) -> int:
    """The tame symbol of {a, b} at p, as an integer in [1, p).

    For nonzero rationals with p-adic valuations v(a), v(b):

        (-1)^(v(a) v(b)) * a^v(b) * b^(-v(a))   reduced mod p.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise ZeroDivisionError("tame symbols need nonzero arguments")
    na, va_n = _strip_p(a.numerator, p)
    da, va_d = _strip_p(a.denominator, p)
    nb, vb_n = _strip_p(b.numerator, p)
    db, vb_d = _strip_p(b.denominator, p)
    va = va_n - va_d
    vb = vb_n - vb_d
    a_unit = (na * pow(da, -1, p)) % p
    b_unit = (nb * pow(db, -1, p)) % p
    val = pow(-1, va * vb, p)
    val = (val * pow(a_unit, vb, p)) % p
    val = (val * pow(b_unit, -va, p)) % p
    return val


class AbelianGroupPresentation:
    """Generators plus an integer relation matrix (rows are relations).

    ``invariant_factors`` lists the torsion coefficients (each >= 2, in a
    divisibility chain); ``snf_diagonal`` keeps the full nonzero diagonal
    of the Smith form, including 1s.
    """

    def __init__(self, generators, relations: SparseIntMatrix, metadata=None):
        if relations.ncols != len(generators):
            raise ValueError("relation matrix width must match generators")
        snf: SNFResult = smith_normal_form(relations)
        self.generators = list(generators)
        self.relations = relations
        self.snf_diagonal = list(snf.invariant_factors)
        self.invariant_factors = snf.torsion
        self.free_rank = snf.free_rank
        self.metadata = dict(metadata or {})

    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    def __repr__(self):
        tor = " x ".join(f"Z/{d}" for d in self.invariant_factors)
        free = f"Z^{self.free_rank}" if self.free_rank else ""
        desc = " x ".join(x for x in (free, tor) if x) or "0"
        return f"AbelianGroupPresentation({desc})"


def milnor_k2_finite_field(q: int) -> AbelianGroupPresentation:
    """Presentation of the symbol group of F_q: generators {u, v} over all
    pairs of units, bilinearity in each slot, and {u, 1-u} = 0.

    Supported for prime powers q <= 16.  The Smith form comes out trivial
    for every such q, matching the classical vanishing.
    """
    from .rings import GF
    if q > 16:
        raise ValueError(f"q={q} is out of range; the field table stops at 16")
    field = GF(q)
    units = field.units()
    gi = {}
    labels = []
    for u in units:
        for v in units:
            gi[(u, v)] = len(labels)
            labels.append(f"{{{u},{v}}}")
    entries = []
    row = 0
    for u1 in units:
        for u2 in units:
            w = u1 * u2
            for v in units:
                entries.append((row, gi[(w, v)], 1))
                entries.append((row, gi[(u1, v)], -1))
                entries.append((row, gi[(u2, v)], -1))
                row += 1
    for v1 in units:
        for v2 in units:
            w = v1 * v2
            for u in units:
                entries.append((row, gi[(u, w)], 1))
                entries.append((row, gi[(u, v1)], -1))
                entries.append((row, gi[(u, v2)], -1))
                row += 1
    one = field.one
    for u in units:
        w = one - u
        if w:
            entries.append((row, gi[(u, w)], 1))
            row += 1
    relations = SparseIntMatrix(row, len(labels), entries)
    return AbelianGroupPresentation(labels, relations, metadata={"q": q})


def _enumerate_group(gens: list[GroupMatrix], bound: int):
    ring, n = gens[0].ring, gens[0].n
    for g in gens:
        if g.ring != ring or g.n != n:
            raise ValueError("generators must share one ring and size")
    identity = GroupMatrix.identity(ring, n)
    seen = {identity}
    order = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                x = g * h
                if x not in seen:
                    if len(seen) >= bound:
                        raise ValueError(
                            f"order bound {bound} exceeded: enumerated "
                            f"{len(seen)} elements so far")
                    seen.add(x)
                    order.append(x)
                    nxt.append(x)
        frontier = nxt
    return order, identity


def schur_multiplier(gens: list[GroupMatrix],
                     order_bound: int = 200) -> AbelianGroupPresentation:
    """H_2(G, Z) of the finite matrix group generated by ``gens``.

    Enumerates the group (error past ``order_bound``), assembles the
    normalized bar complex in degrees 1..3 over the integers, verifies
    d2 . d3 = 0 exactly, and reads off ker d2 / im d3 via Smith normal
    form.  The result is returned as a diagonal presentation.
    """
    if not gens:
        raise ValueError("at least one generator is required")
    elems, identity = _enumerate_group(gens, order_bound)
    nontriv = [g for g in elems if g != identity]
    idx = {g: k for k, g in enumerate(nontriv)}
    m = len(nontriv)

    prod = {}
    for a in elems:
        for b in elems:
            prod[(a, b)] = a * b

    pair_idx = {}
    for g in nontriv:
        for h in nontriv:
            pair_idx[(g, h)] = len(pair_idx)
    npairs = m * m

    # d2[g|h] = [h] - [gh] + [g], dropping the degenerate [e]
    d2_entries = []
    d2_cols: list[dict[int, int]] = [dict() for _ in range(npairs)]
    for (g, h), c in pair_idx.items():
        col = d2_cols[c]
        for key, s in ((h, 1), (prod[(g, h)], -1), (g, 1)):
            r = idx.get(key)
            if r is None:
                continue
            col[r] = col.get(r, 0) + s
            if col[r] == 0:
                del col[r]
    for c, col in enumerate(d2_cols):
        for r, v in col.items():
            d2_entries.append((r, c, v))
    d2 = SparseIntMatrix(m, npairs, d2_entries)

    # d3[g|h|k] = [h|k] - [gh|k] + [g|hk] - [g|h], dropping tuples with e
    d3_entries = []
    d3_cols: list[dict[int, int]] = []
    col = 0
    for g in nontriv:
        for h in nontriv:
            gh = prod[(g, h)]
            base = pair_idx[(g, h)]
            for k in nontriv:
                hk = prod[(h, k)]
                coldict: dict[int, int] = {}
                for key, s in (((h, k), 1), ((gh, k), -1),
                               ((g, hk), 1), ((g, h), -1)):
                    r = pair_idx.get(key)
                    if r is None:
                        continue
                    coldict[r] = coldict.get(r, 0) + s
                    if coldict[r] == 0:
                        del coldict[r]
                for r, v in coldict.items():
                    d3_entries.append((r, col, v))
                d3_cols.append(coldict)
                col += 1
    d3 = SparseIntMatrix(npairs, col, d3_entries)

    # the boundary must square to zero before any Smith form is trusted
    for coldict in d3_cols:
        acc: dict[int, int] = {}
        for r, v in coldict.items():
            for rr, w in d2_cols[r].items():
                acc[rr] = acc.get(rr, 0) + v * w
        if any(acc.values()):
            raise RuntimeError("bar-complex boundary does not square to zero")

    snf3 = smith_normal_form(d3)
    snf2 = smith_normal_form(d2)
    null2 = npairs - snf2.rank
    free_rank = null2 - snf3.rank
    torsion = snf3.torsion

    ngens = len(torsion) + free_rank
    labels = [f"h{i + 1}" for i in range(ngens)]
    relations = SparseIntMatrix(
        len(torsion), ngens,
        [(i, i, d) for i, d in enumerate(torsion)])
    meta = {
        "group_order": len(elems),
        "complex": "normalized bar, degrees 1..3",
        "note": "finite matrix group used as oracle-validation data only",
    }
    return AbelianGroupPresentation(labels, relations, metadata=meta)
