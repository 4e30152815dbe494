"""Sparse matrices over the Laurent ring on a tensor-factor layout.

Convention: factor 0 of a layout is the leftmost tensor slot; composite
basis index is row-major (``idx = i0*d1*...*dk + i1*d2*... + ...``).  The
auxiliary space of a transfer-matrix construction is always factor 0, so
its partial trace is a leading-block sum.
"""

from __future__ import annotations

from .errors import DimensionMismatch
from .rings import LaurentPoly, LaurentRatio, Rational, lp_ratio, rat, _mul_into


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def _strides(layout) -> list[int]:
    n = len(layout)
    st = [1] * n
    for k in range(n - 2, -1, -1):
        st[k] = st[k + 1] * layout[k + 1]
    return st


class PolyMatrix:
    """Square sparse matrix with LaurentPoly entries and a factor layout."""

    __slots__ = ("dim", "layout", "rows")

    def __init__(self, layout, entries=None):
        self.layout = tuple(int(d) for d in layout)
        self.dim = _prod(self.layout)
        self.rows: dict[int, dict[int, LaurentPoly]] = {}
        if entries:
            for (r, c), val in entries.items():
                self._set(r, c, val)

    # -- construction ---------------------------------------------------
    @classmethod
    def zeros(cls, layout) -> "PolyMatrix":
        return cls(layout)

    @classmethod
    def identity(cls, layout) -> "PolyMatrix":
        m = cls(layout)
        one = LaurentPoly.const(1)
        for i in range(m.dim):
            m.rows[i] = {i: one}
        return m

    @classmethod
    def from_dense(cls, rows, layout) -> "PolyMatrix":
        m = cls(layout)
        for r, row in enumerate(rows):
            for c, val in enumerate(row):
                m._set(r, c, val)
        return m

    def _set(self, r: int, c: int, val) -> None:
        if not isinstance(val, LaurentPoly):
            val = LaurentPoly.const(val)
        if r >= self.dim or c >= self.dim or r < 0 or c < 0:
            raise DimensionMismatch(f"entry ({r},{c}) outside dim {self.dim}")
        if val.is_zero:
            row = self.rows.get(r)
            if row and c in row:
                del row[c]
                if not row:
                    del self.rows[r]
        else:
            self.rows.setdefault(r, {})[c] = val

    def get(self, r: int, c: int) -> LaurentPoly:
        row = self.rows.get(r)
        if row is None:
            return LaurentPoly.zero()
        return row.get(c, LaurentPoly.zero())

    def entries(self):
        """Iterate ``(r, c, value)`` sorted by (r, c)."""
        for r in sorted(self.rows):
            row = self.rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    @property
    def is_zero(self) -> bool:
        return not self.rows

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.dim != other.dim:
            raise DimensionMismatch("matrix addition needs equal dims")
        out = PolyMatrix(self.layout)
        for r, row in self.rows.items():
            out.rows[r] = dict(row)
        for r, row in other.rows.items():
            orow = out.rows.setdefault(r, {})
            for c, v in row.items():
                s = orow.get(c)
                s = v if s is None else s + v
                if s.is_zero:
                    del orow[c]
                else:
                    orow[c] = s
            if not orow:
                del out.rows[r]
        return out

    def __neg__(self) -> "PolyMatrix":
        out = PolyMatrix(self.layout)
        for r, row in self.rows.items():
            out.rows[r] = {c: -v for c, v in row.items()}
        return out

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            return self._matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything here
        return self.scale(other)

    def scale(self, s) -> "PolyMatrix":
        if not isinstance(s, LaurentPoly):
            s = LaurentPoly.const(s)
        out = PolyMatrix(self.layout)
        if s.is_zero:
            return out
        for r, row in self.rows.items():
            out.rows[r] = {c: v * s for c, v in row.items()}
        return out

    def _matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.dim != other.dim:
            raise DimensionMismatch("matrix product needs equal dims")
        out = PolyMatrix(self.layout)
        orows = other.rows
        for r, arow in self.rows.items():
            acc: dict[int, dict] = {}
            for k, a in arow.items():
                brow = orows.get(k)
                if not brow:
                    continue
                at = a.terms
                for c, b in brow.items():
                    tgt = acc.get(c)
                    if tgt is None:
                        tgt = acc[c] = {}
                    _mul_into(tgt, at, b.terms)
            orow = {}
            for c, terms in acc.items():
                if terms:
                    p = LaurentPoly.__new__(LaurentPoly)
                    p.terms = terms
                    orow[c] = p
            if orow:
                out.rows[r] = orow
        return out

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self):  # pragma: no cover - matrices rarely hashed
        return hash((self.dim, frozenset((r, c, v) for r, c, v in self.entries())))

    # -- structural operations ---------------------------------------------
    def transpose(self) -> "PolyMatrix":
        out = PolyMatrix(self.layout)
        for r, row in self.rows.items():
            for c, v in row.items():
                out.rows.setdefault(c, {})[r] = v
        return out

    def partial_transpose(self, factor: int) -> "PolyMatrix":
        """Transpose the indices of one tensor factor only."""
        if factor >= len(self.layout):
            raise DimensionMismatch(f"factor {factor} outside layout {self.layout}")
        st = _strides(self.layout)[factor]
        d = self.layout[factor]
        out = PolyMatrix(self.layout)
        for r, row in self.rows.items():
            a = (r // st) % d
            base_r = r - a * st
            for c, v in row.items():
                b = (c // st) % d
                out.rows.setdefault(base_r + b * st, {})[c - b * st + a * st] = v
        return out

    def partial_trace_first(self) -> "PolyMatrix":
        """Trace out factor 0; the result lives on the remaining factors."""
        if len(self.layout) < 2:
            raise DimensionMismatch("partial trace needs at least two factors")
        rest = self.dim // self.layout[0]
        out = PolyMatrix(self.layout[1:])
        for r, row in self.rows.items():
            i, rr = divmod(r, rest)
            base = i * rest
            orow = None
            for c, v in row.items():
                if base <= c < base + rest:
                    if orow is None:
                        orow = out.rows.setdefault(rr, {})
                    cc = c - base
                    s = orow.get(cc)
                    s = v if s is None else s + v
                    if s.is_zero:
                        del orow[cc]
                    else:
                        orow[cc] = s
            if orow is not None and not orow:
                del out.rows[rr]
        return out

    def evaluate(self, x) -> "PolyMatrix":
        """Specialize the formal variable at a rational point."""
        out = PolyMatrix(self.layout)
        for r, row in self.rows.items():
            orow = {}
            for c, v in row.items():
                val = v.evaluate(x)
                if val:
                    orow[c] = LaurentPoly.const(val)
            if orow:
                out.rows[r] = orow
        return out

    def min_degree(self) -> int:
        return min(v.min_deg() for _, _, v in self.entries())

    def max_degree(self) -> int:
        return max(v.max_deg() for _, _, v in self.entries())

    def coefficient(self, deg: int) -> "PolyMatrix":
        """Constant matrix of the ``u^deg`` coefficients."""
        out = PolyMatrix(self.layout)
        for r, row in self.rows.items():
            orow = {}
            for c, v in row.items():
                coef = v.coeff(deg)
                if coef:
                    orow[c] = LaurentPoly.const(coef)
            if orow:
                out.rows[r] = orow
        return out

    def to_dump_dict(self) -> dict:
        """Canonical dump form: entries sorted by (row, col), degrees ascending."""
        ents = []
        for r, c, v in self.entries():
            ents.append([r, c, [[d, int(v.terms[d].numerator), int(v.terms[d].denominator)]
                                for d in sorted(v.terms)]])
        return {"dim": self.dim, "layout": list(self.layout), "entries": ents}


# ---------------------------------------------------------------------------
# layout operations
# ---------------------------------------------------------------------------

def kron(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Kronecker product; composite index ``i_a * dim(b) + i_b``."""
    out = PolyMatrix(a.layout + b.layout)
    db = b.dim
    for ra, rowa in a.rows.items():
        for ca, va in rowa.items():
            for rb, rowb in b.rows.items():
                orow = out.rows.setdefault(ra * db + rb, {})
                for cb, vb in rowb.items():
                    orow[ca * db + cb] = va * vb
    return out


def embed_pair(op: PolyMatrix, i: int, j: int, layout) -> PolyMatrix:
    """Embed a two-factor operator with its first slot at factor ``i`` and
    second slot at factor ``j`` (any distinct positions), identity elsewhere."""
    layout = tuple(layout)
    if i == j or i >= len(layout) or j >= len(layout):
        raise DimensionMismatch(f"invalid factor pair ({i},{j}) for layout {layout}")
    di, dj = layout[i], layout[j]
    if op.dim != di * dj:
        raise DimensionMismatch(f"operator dim {op.dim} != {di}*{dj}")
    st = _strides(layout)
    si, sj = st[i], st[j]
    dim = _prod(layout)
    out = PolyMatrix(layout)
    # enumerate composite indices with the (i, j) digits stripped out
    others = [k for k in range(len(layout)) if k not in (i, j)]

    def rec(pos: int, base: int):
        if pos == len(others):
            for r, row in op.rows.items():
                a, b = divmod(r, dj)
                rr = base + a * si + b * sj
                orow = out.rows.setdefault(rr, {})
                for c, v in row.items():
                    a2, b2 = divmod(c, dj)
                    orow[base + a2 * si + b2 * sj] = v
            return
        k = others[pos]
        for digit in range(layout[k]):
            rec(pos + 1, base + digit * st[k])

    rec(0, 0)
    if dim and not out.rows and not op.is_zero:  # pragma: no cover - safety
        raise DimensionMismatch("embedding produced an empty matrix")
    return out


def embed_site(op: PolyMatrix, i: int, layout) -> PolyMatrix:
    """Embed a one-factor operator at factor ``i``, identity elsewhere."""
    layout = tuple(layout)
    if i >= len(layout):
        raise DimensionMismatch(f"factor {i} outside layout {layout}")
    if op.dim != layout[i]:
        raise DimensionMismatch(f"operator dim {op.dim} != factor dim {layout[i]}")
    st = _strides(layout)
    si = st[i]
    out = PolyMatrix(layout)
    others = [k for k in range(len(layout)) if k != i]

    def rec(pos: int, base: int):
        if pos == len(others):
            for r, row in op.rows.items():
                orow = out.rows.setdefault(base + r * si, {})
                for c, v in row.items():
                    orow[base + c * si] = v
            return
        k = others[pos]
        for digit in range(layout[k]):
            rec(pos + 1, base + digit * st[k])

    rec(0, 0)
    return out


def embed(op: PolyMatrix, at_factors, layout) -> PolyMatrix:
    """Embed a one- or two-site operator; two-site positions must be
    contiguous.  Factor positions are 0-based."""
    positions = list(at_factors)
    if len(positions) == 1:
        return embed_site(op, positions[0], layout)
    if len(positions) == 2:
        i, j = positions
        if j != i + 1:
            raise DimensionMismatch("two-site operators embed at contiguous factors")
        return embed_pair(op, i, j, layout)
    raise DimensionMismatch("embed supports one- or two-factor operators")


def permutation_pair(i: int, j: int, layout) -> PolyMatrix:
    """The flip operator P exchanging factors ``i`` and ``j``."""
    layout = tuple(layout)
    d = layout[i]
    if layout[j] != d:
        raise DimensionMismatch("can only flip equal-dimension factors")
    p = PolyMatrix((d, d))
    one = LaurentPoly.const(1)
    for a in range(d):
        for b in range(d):
            p.rows.setdefault(a * d + b, {})[b * d + a] = one
    return embed_pair(p, i, j, layout)


def mat_proportional(a: PolyMatrix, b: PolyMatrix) -> LaurentRatio | None:
    """Common exact ratio ``r`` with ``a == r*b`` entrywise, or None.

    The ratio is seeded from the first nonzero entry pair and verified on
    every entry; scalar, monomial and full rational-function ratios are all
    accepted.
    """
    if a.dim != b.dim:
        raise DimensionMismatch("proportionality needs equal dims")
    if b.is_zero:
        return lp_ratio(LaurentPoly.zero(), LaurentPoly.zero()) if a.is_zero else None
    ratio = None
    for r, c, v in b.entries():
        av = a.get(r, c)
        if not av.is_zero:
            ratio = lp_ratio(av, v)
            break
    if ratio is None:
        # a vanishes wherever b does not; if a == 0 the ratio is 0
        ratio = lp_ratio(LaurentPoly.zero(), LaurentPoly.const(1))
    num, den = ratio.num, ratio.den
    seen = set()
    for r, c, v in b.entries():
        seen.add((r, c))
        if a.get(r, c) * den != v * num:
            return None
    for r, c, v in a.entries():
        if (r, c) not in seen and not v.is_zero:
            return None  # a has support outside b
    return ratio


# ---------------------------------------------------------------------------
# exact dense linear algebra over the rationals (small systems only)
# ---------------------------------------------------------------------------

def nullspace(rows: list[list]) -> list[list]:
    """Basis of the right nullspace of a dense rational matrix."""
    if not rows:
        return []
    m, n = len(rows), len(rows[0])
    a = [list(map(lambda x: x if isinstance(x, Rational) else rat(x), row)) for row in rows]
    pivots = []
    r = 0
    for col in range(n):
        pr = None
        for i in range(r, m):
            if a[i][col] != 0:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = rat(1) / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [rat(0)] * n
        vec[fc] = rat(1)
        for prow, pcol in enumerate(pivots):
            vec[pcol] = -a[prow][fc]
        basis.append(vec)
    return basis


def lin_solve(rows: list[list], rhs: list) -> list | None:
    """Exact solution of ``A x = b`` for consistent systems, else None."""
    n = len(rows[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    m = len(aug)
    a = [[x if isinstance(x, Rational) else rat(x) for x in row] for row in aug]
    pivots = []
    r = 0
    for col in range(n):
        pr = None
        for i in range(r, m):
            if a[i][col] != 0:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = rat(1) / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    for i in range(r, m):
        if a[i][n] != 0:
            return None  # inconsistent
    x = [rat(0)] * n
    for prow, pcol in enumerate(pivots):
        x[pcol] = a[prow][n]
    return x
