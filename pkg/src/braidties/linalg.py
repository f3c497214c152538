r"""Rank engines used by the algebra modules.

Two workhorses:

- `Echelon`: sparse reduced row echelon over any exact field scalar
  (Fraction, rational function, cyclotomic — anything with `+`, `-`, `*`,
  `/` and truthiness as the zero test).  Vectors are dicts column -> scalar.
  The pivot of a new row is its minimal column, so a fixed basis ordering
  makes the echelon form, and therefore every rank, bit-reproducible.

- `ModPEchelon`: dense batched row echelon over a prime field F_p with
  p < 2^20, carried by numpy float64 matmuls.  All intermediate values stay
  below (p-1)^2 * ncols < 2^53, so every float operation is exact integer
  arithmetic; this is a certificate-grade computation, not an approximation.

>>> from fractions import Fraction
>>> e = Echelon()
>>> e.insert({0: Fraction(2), 1: Fraction(4)})
0
>>> e.insert({1: Fraction(1)})
1
>>> e.insert({0: Fraction(1), 1: Fraction(7)}) is None
True
>>> e.rank
2
"""

from __future__ import annotations

import numpy as np


class Echelon:
    """Reduced row echelon accumulator; rows indexed by pivot column."""

    def __init__(self):
        self.rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Residual of vec after eliminating all current pivots.

        Stored rows are fully reduced (zero at every other pivot column),
        so one pass over the pivot entries of vec suffices.
        """
        out = dict(vec)
        for c in [c for c in out if c in self.rows]:
            coef = out.pop(c)
            if not coef:
                continue
            for c2, x in self.rows[c].items():
                if c2 == c:
                    continue
                y = out.get(c2)
                y = -coef * x if y is None else y - coef * x
                if y:
                    out[c2] = y
                else:
                    out.pop(c2, None)
        return out

    def insert(self, vec: dict):
        """Insert a vector; returns its pivot column, or None if dependent."""
        res = self.reduce(vec)
        if not res:
            return None
        pivot = min(res)
        val = res[pivot]
        row = {c: x / val for c, x in res.items()}
        for r0 in self.rows.values():
            x = r0.get(pivot)
            if x:
                for c2, y in row.items():
                    z = r0.get(c2)
                    z = -x * y if z is None else z - x * y
                    if z:
                        r0[c2] = z
                    else:
                        r0.pop(c2, None)
        self.rows[pivot] = row
        return pivot

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


class TaggedEchelon:
    """Echelon that carries a side tag (any dict of scalars) per row,
    mirroring every row operation on the tags.  If each inserted vector
    comes with a tag describing how it was produced, `combination(vec)`
    reports vec as the same kind of combination — or None when vec is
    outside the span.

    >>> from fractions import Fraction
    >>> t = TaggedEchelon()
    >>> t.insert({0: Fraction(1)}, {'a': Fraction(1)})
    0
    >>> t.insert({0: Fraction(1), 1: Fraction(1)}, {'b': Fraction(1)})
    1
    >>> t.combination({1: Fraction(2)}) == {'a': Fraction(-2), 'b': Fraction(2)}
    True
    >>> t.combination({2: Fraction(1)}) is None
    True
    """

    def __init__(self):
        self.rows: dict[int, tuple[dict, dict]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @staticmethod
    def _submul(dst: dict, src: dict, coef) -> None:
        """dst -= coef * src, dropping zeros."""
        for k, x in src.items():
            y = dst.get(k)
            y = -coef * x if y is None else y - coef * x
            if y:
                dst[k] = y
            else:
                dst.pop(k, None)

    def reduce(self, vec: dict, tag: dict) -> tuple[dict, dict]:
        vec, tag = dict(vec), dict(tag)
        for c in [c for c in vec if c in self.rows]:
            coef = vec.pop(c)
            if not coef:
                continue
            rvec, rtag = self.rows[c]
            self._submul(vec, {k: x for k, x in rvec.items() if k != c}, coef)
            self._submul(tag, rtag, coef)
        return vec, tag

    def insert(self, vec: dict, tag: dict):
        vec, tag = self.reduce(vec, tag)
        if not vec:
            return None
        pivot = min(vec)
        val = vec[pivot]
        vec = {c: x / val for c, x in vec.items()}
        tag = {k: x / val for k, x in tag.items()}
        for rvec, rtag in self.rows.values():
            coef = rvec.get(pivot)
            if coef:
                self._submul(rvec, vec, coef)
                self._submul(rtag, tag, coef)
        self.rows[pivot] = (vec, tag)
        return pivot

    def combination(self, vec: dict):
        """Tag-combination expressing vec over the inserted vectors, or
        None if vec is not in their span."""
        res, tag = self.reduce(vec, {})
        if res:
            return None
        return {k: -x for k, x in tag.items()}


class ModPEchelon:
    """Batched reduced row echelon over F_p via exact float64 arithmetic.

    p must satisfy (p-1)^2 * ncols < 2^53; asserted on construction.
    """

    def __init__(self, ncols: int, p: int):
        if (p - 1) ** 2 * ncols >= 2 ** 53:
            raise ValueError("p too large for exact float64 accumulation")
        self.p = p
        self.ncols = ncols
        self.E = np.zeros((0, ncols))
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add_batch(self, C: np.ndarray) -> int:
        """Reduce the rows of C against the echelon and absorb the
        independent ones; returns the number of new pivots. C is consumed."""
        p = self.p
        C = np.mod(C, p)
        if self.pivots:
            C = np.mod(C - C[:, self.pivots] @ self.E, p)
        new_rows: list[np.ndarray] = []
        new_pivs: list[int] = []
        for idx in range(C.shape[0]):
            row = C[idx]
            nz = np.nonzero(row)[0]
            if nz.size == 0:
                continue
            c = int(nz[0])
            inv = pow(int(row[c]), p - 2, p)
            row = np.mod(row * inv, p)
            rest = C[idx + 1:]
            if rest.shape[0]:
                col = rest[:, c]
                mask = col != 0
                if mask.any():
                    rest[mask] = np.mod(rest[mask] - np.outer(col[mask], row), p)
            new_rows.append(row)
            new_pivs.append(c)
        if not new_rows:
            return 0
        N = np.vstack(new_rows)
        # make the new block internally reduced (clear earlier rows at
        # later pivots), then clear the new pivots from the old rows
        for j in range(1, len(new_pivs)):
            cj = new_pivs[j]
            col = N[:j, cj]
            mask = col != 0
            if mask.any():
                N[:j][mask] = np.mod(N[:j][mask] - np.outer(col[mask], N[j]), p)
        if self.pivots:
            coef = self.E[:, new_pivs]
            if np.any(coef):
                self.E = np.mod(self.E - coef @ N, p)
        self.E = np.vstack([self.E, N])
        self.pivots.extend(new_pivs)
        return len(new_pivs)


def solve_dense(A: list[list], b: list, zero, one):
    """Solve A x = b exactly by Gaussian elimination over any field.

    A is a list of rows; raises ValueError if the system is singular or
    inconsistent.  Small systems only.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    M = [list(row) + [bi] for row, bi in zip(A, b)]
    where = [-1] * n
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = one / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        where[c] = r
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if M[i][n]:
            raise ValueError("inconsistent linear system")
    if any(w < 0 for w in where):
        raise ValueError("singular linear system (multiple solutions)")
    return [M[where[c]][n] for c in range(n)]


if __name__ == "__main__":
    import doctest
    doctest.testmod()
