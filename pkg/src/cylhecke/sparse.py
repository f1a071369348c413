"""Sparse matrices and vectors over an exact field (QField or CycloScalar).

Layout is dict-of-rows {row: {col: scalar}}; no zero entries are stored.
Scalars only need field ops and truthiness, so the same code serves generic-q
and cyclotomic arithmetic.
"""

from __future__ import annotations


class SparseMat:
    __slots__ = ("dim", "rows")

    def __init__(self, dim, rows=None):
        self.dim = dim
        self.rows = {} if rows is None else rows

    @staticmethod
    def identity(dim, one):
        return SparseMat(dim, {i: {i: one} for i in range(dim)})

    def copy(self):
        return SparseMat(self.dim, {r: dict(cols) for r, cols in self.rows.items()})

    def set(self, r, c, value):
        if value:
            self.rows.setdefault(r, {})[c] = value
        else:
            row = self.rows.get(r)
            if row and c in row:
                del row[c]
                if not row:
                    del self.rows[r]

    def get(self, r, c):
        row = self.rows.get(r)
        return row.get(c) if row else None

    def nnz(self):
        return sum(len(r) for r in self.rows.values())

    def is_zero(self):
        return not self.rows

    def __add__(self, other):
        out = self.copy()
        for r, cols in other.rows.items():
            orow = out.rows.setdefault(r, {})
            for c, v in cols.items():
                s = orow[c] + v if c in orow else v
                if s:
                    orow[c] = s
                else:
                    del orow[c]
            if not orow:
                del out.rows[r]
        return out

    def __neg__(self):
        return SparseMat(self.dim, {r: {c: -v for c, v in cols.items()} for r, cols in self.rows.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, s):
        if not s:
            return SparseMat(self.dim)
        return SparseMat(self.dim, {r: {c: v * s for c, v in cols.items()} for r, cols in self.rows.items()})

    def __mul__(self, other):
        """Matrix product self @ other."""
        if not isinstance(other, SparseMat):
            return NotImplemented
        out = {}
        orows = other.rows
        for r, cols in self.rows.items():
            acc = {}
            for k, a in cols.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for c, b in brow.items():
                    s = acc[c] + a * b if c in acc else a * b
                    if s:
                        acc[c] = s
                    else:
                        del acc[c]
            if acc:
                out[r] = acc
        return SparseMat(self.dim, out)

    def apply(self, vec: dict) -> dict:
        """Matrix times sparse column vector {index: scalar}."""
        out = {}
        for r, cols in self.rows.items():
            acc = None
            for k, a in cols.items():
                v = vec.get(k)
                if v is not None:
                    acc = a * v if acc is None else acc + a * v
            if acc is not None and acc:
                out[r] = acc
        return out

    def transpose(self):
        out = {}
        for r, cols in self.rows.items():
            for c, v in cols.items():
                out.setdefault(c, {})[r] = v
        return SparseMat(self.dim, out)

    def add_scalar_identity(self, s, one):
        """self + s*I."""
        out = self.copy()
        for i in range(self.dim):
            row = out.rows.setdefault(i, {})
            t = row[i] + s if i in row else s
            if t:
                row[i] = t
            else:
                row.pop(i, None)
            if not row:
                del out.rows[i]
        return out

    def __eq__(self, other):
        if not isinstance(other, SparseMat):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self):
        raise TypeError("SparseMat is unhashable")

    def first_nonzero(self):
        """Smallest (row, col, value) in lexicographic order, or None."""
        if not self.rows:
            return None
        r = min(self.rows)
        c = min(self.rows[r])
        return (r, c, self.rows[r][c])

    def __repr__(self):
        return f"SparseMat(dim={self.dim}, nnz={self.nnz()})"


def vec_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out[k] + v if k in out else v
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def vec_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out[k] - v if k in out else -v
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def vec_scale(a: dict, s) -> dict:
    if not s:
        return {}
    return {k: v * s for k, v in a.items()}


def vec_eq(a: dict, b: dict) -> bool:
    return a == b


class TriangularBasis:
    """Incremental exact elimination for expanding vectors in a growing basis.

    Basis vectors are inserted once; expand() then writes any vector as a
    linear combination of the inserted ones (plus a residual).  Used to turn
    operator images of states back into structure constants.
    """

    def __init__(self):
        self.vectors = []  # original basis vectors, in insertion order
        self.reduced = []  # reduced forms, one pivot each
        self.pivots = []  # pivot key of each reduced vector
        self.combos = []  # expansion of each reduced vector in the originals

    def __len__(self):
        return len(self.vectors)

    def _reduce(self, vec):
        """Eliminate existing pivots from vec; returns (residual, combo)."""
        combo = {}
        vec = dict(vec)
        for i, p in enumerate(self.pivots):
            v = vec.get(p)
            if v is None or not v:
                continue
            f = v / self.reduced[i][p]
            vec = vec_sub(vec, vec_scale(self.reduced[i], f))
            for j, cf in self.combos[i].items():
                s = combo.get(j)
                t = cf * f if s is None else s + cf * f
                if t:
                    combo[j] = t
                else:
                    combo.pop(j, None)
        return vec, combo

    def insert(self, vec) -> bool:
        """Add a basis vector; False if it is dependent on the existing ones."""
        residual, combo = self._reduce(vec)
        if not residual:
            return False
        idx = len(self.vectors)
        self.vectors.append(dict(vec))
        pivot = min(residual)
        self.pivots.append(pivot)
        self.reduced.append(residual)
        self.combos.append({**{j: -c for j, c in combo.items()}, idx: _one_like(residual[pivot])})
        return True

    def expand(self, vec):
        """Coefficients {index: scalar} with vec = sum coeff_i * vectors[i].

        Raises ValueError if vec is outside the span.
        """
        residual, combo = self._reduce(vec)
        if residual:
            raise ValueError("vector outside the span of the basis")
        return combo


def _one_like(scalar):
    return scalar / scalar
