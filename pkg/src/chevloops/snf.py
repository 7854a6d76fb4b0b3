"""Sparse integer matrices and exact Smith normal form.

The elimination is fraction-free throughout: pivots are chosen by
minimal absolute value (ties broken towards low fill), rows and columns
are cleared with integer transvections, and the resulting diagonal is
fixed up into a divisibility chain by gcd/lcm exchanges.  A modular
consistency check recomputes the rank over two random primes larger
than every invariant factor and refuses to return on a mismatch.
"""

from __future__ import annotations

import math
import random
from typing import Iterable, NamedTuple


class SparseIntMatrix:
    """Immutable sparse integer matrix with (row, col) -> value entries."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int,
                 entries: Iterable[tuple[int, int, int]] = ()):
        data: dict[tuple[int, int], int] = {}
        for i, j, v in entries:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ValueError(f"entry ({i}, {j}) out of range")
            v = int(v)
            if v:
                w = data.get((i, j), 0) + v
                if w:
                    data[(i, j)] = w
                else:
                    data.pop((i, j), None)
        self.nrows = nrows
        self.ncols = ncols
        self.entries = data

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "SparseIntMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        ent = [(i, j, v) for i, row in enumerate(rows)
               for j, v in enumerate(row) if v]
        return cls(nrows, ncols, ent)

    def permuted(self, row_perm: list[int], col_perm: list[int]):
        return SparseIntMatrix(
            self.nrows, self.ncols,
            [(row_perm[i], col_perm[j], v)
             for (i, j), v in self.entries.items()])

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix(
            self.ncols, self.nrows,
            [(j, i, v) for (i, j), v in self.entries.items()])

    def row_dicts(self) -> dict[int, dict[int, int]]:
        rows: dict[int, dict[int, int]] = {}
        for (i, j), v in self.entries.items():
            rows.setdefault(i, {})[j] = v
        return rows

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.entries) == \
            (other.nrows, other.ncols, other.entries)

    def __repr__(self):
        return (f"SparseIntMatrix({self.nrows}x{self.ncols}, "
                f"{len(self.entries)} nonzero)")


class SNFResult(NamedTuple):
    invariant_factors: list[int]   # nonzero diagonal, d1 | d2 | ...
    free_rank: int                 # columns (generators) minus rank

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> list[int]:
        return [d for d in self.invariant_factors if d > 1]


def _divisibility_chain(diag: list[int]) -> list[int]:
    # diag(a, b) ~ diag(gcd(a, b), lcm(a, b)); iterate to a chain
    d = sorted(abs(x) for x in diag)
    changed = True
    while changed:
        changed = False
        for a in range(len(d)):
            for b in range(a + 1, len(d)):
                if d[b] % d[a]:
                    g = math.gcd(d[a], d[b])
                    d[a], d[b] = g, d[a] * d[b] // g
                    changed = True
        d.sort()
    return d


def _rank_mod_p(matrix: SparseIntMatrix, p: int) -> int:
    # row-reduce the transpose incrementally: its rows are short
    piv: dict[int, dict[int, int]] = {}
    cols: dict[int, dict[int, int]] = {}
    for (i, j), v in matrix.entries.items():
        if v % p:
            cols.setdefault(j, {})[i] = v % p
    for r in cols.values():
        r = dict(r)
        while r:
            lead = min(r)
            pr = piv.get(lead)
            if pr is None:
                inv = pow(r[lead], -1, p)
                piv[lead] = {k: (v * inv) % p for k, v in r.items()}
                break
            c = r[lead]
            for k, v in pr.items():
                nv = (r.get(k, 0) - c * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(piv)


def _next_prime(n: int) -> int:
    n += 1
    while True:
        if n > 2 and n % 2 == 0:
            n += 1
            continue
        is_p = n >= 2
        d = 3
        if n % 2 == 0 and n != 2:
            is_p = False
        while d * d <= n:
            if n % d == 0:
                is_p = False
                break
            d += 2
        if is_p:
            return n
        n += 1


def smith_normal_form(matrix: SparseIntMatrix) -> SNFResult:
    """Invariant factors (including 1s) and free rank of coker, columns
    read as generators and rows as relations."""
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), v in matrix.entries.items():
        rows.setdefault(i, {})[j] = v
        cols.setdefault(j, set()).add(i)

    def add_row(dst: int, src: int, c: int):
        rd = rows.setdefault(dst, {})
        for j, v in rows[src].items():
            nv = rd.get(j, 0) + c * v
            if nv:
                if j not in rd:
                    cols.setdefault(j, set()).add(dst)
                rd[j] = nv
            elif j in rd:
                del rd[j]
                cols[j].discard(dst)
                if not cols[j]:
                    del cols[j]
        if not rd:
            del rows[dst]

    def add_col(dst: int, src: int, c: int):
        for i in list(cols.get(src, ())):
            v = rows[i][src]
            ri = rows[i]
            nv = ri.get(dst, 0) + c * v
            if nv:
                if dst not in ri:
                    cols.setdefault(dst, set()).add(i)
                ri[dst] = nv
            elif dst in ri:
                del ri[dst]
                cols[dst].discard(i)
                if not cols[dst]:
                    del cols[dst]

    diag: list[int] = []
    while rows:
        # pivot: minimal |value|, then lowest fill (Markowitz), then position
        best_key = None
        pi = pj = -1
        for i, r in rows.items():
            li = len(r) - 1
            for j, v in r.items():
                key = (abs(v), li * (len(cols[j]) - 1), i, j)
                if best_key is None or key < best_key:
                    best_key = key
                    pi, pj = i, j
            if best_key is not None and best_key[:2] == (1, 0):
                break
        while True:
            v = rows[pi][pj]
            for i in list(cols[pj]):
                if i != pi:
                    add_row(i, pi, -(rows[i][pj] // v))
            for j in list(rows[pi]):
                if j != pj:
                    add_col(j, pj, -(rows[pi][j] // v))
            if len(rows[pi]) == 1 and len(cols[pj]) == 1:
                break
            # nonzero remainders survive: migrate the pivot to the smallest
            # of them; its absolute value strictly decreased, so this ends
            cand = [(abs(rows[i][pj]), i, pj) for i in cols[pj] if i != pi]
            cand += [(abs(rows[pi][j]), pi, j) for j in rows[pi] if j != pj]
            cand.append((abs(rows[pi][pj]), pi, pj))
            _, pi, pj = min(cand)
        diag.append(abs(rows[pi][pj]))
        del rows[pi]
        del cols[pj]

    factors = _divisibility_chain(diag)
    free_rank = matrix.ncols - len(factors)

    # modular consistency: the rank over F_p equals the number of nonzero
    # invariant factors whenever p exceeds all of them
    bound = max(factors, default=1)
    rng = random.Random(0x5EED)
    start = max(bound + 1, 10 ** 6)
    candidates = []
    p = start
    for _ in range(12):
        p = _next_prime(p)
        candidates.append(p)
    for p in rng.sample(candidates, 2):
        if _rank_mod_p(matrix, p) != len(factors):
            raise RuntimeError(
                f"Smith normal form failed its mod-{p} rank cross-check")
    return SNFResult(factors, free_rank)
