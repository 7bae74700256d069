"""Exact linear algebra over the integers.

Everything here works with arbitrary-precision Python ints; intermediate
entries in Smith/Hermite eliminations can far exceed any fixed word size.

Three tiers, one substance:

* ``smith_normal_form`` is the transform-tracked decomposition U*A*V = S used
  wherever generators or coordinates are needed (kernels, homology classes).
* ``IntegerSolver`` factors a matrix once (column Hermite form) and answers
  many A x = b queries; a particular solution is produced by back
  substitution, with no size minimization, so results are deterministic.
* ``sparse_invariant_factors`` / ``sparse_rank`` eliminate with +/-1 pivots on
  sparse data and fall back to dense Smith form on the small residue once no
  unit pivot remains or fill-in passes a density threshold.  This is what
  scales to the large bar-resolution boundary matrices.

Pivot rule for the dense Smith form: smallest nonzero absolute value, ties
broken by lowest (row, col).  Fixed so decompositions are reproducible.
"""

from __future__ import annotations

from typing import Iterable, Sequence

# Fall back from sparse elimination to a dense Smith form when the remaining
# fill-in density exceeds this fraction (config knob).
DENSE_FALLBACK_DENSITY = 0.25


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b and g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


class IntMatrix:
    """A dense integer matrix (list-of-rows).  Storage detail stays behind this class."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, data: Sequence[Sequence[int]], ncols: int | None = None):
        self.data = [list(row) for row in data]
        self.nrows = len(self.data)
        if self.nrows:
            self.ncols = len(self.data[0])
            if any(len(row) != self.ncols for row in self.data):
                raise ValueError("ragged rows")
        else:
            self.ncols = 0 if ncols is None else ncols
        if ncols is not None and self.nrows and ncols != self.ncols:
            raise ValueError("ncols does not match row length")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    @classmethod
    def from_sparse_columns(cls, cols: Sequence[dict[int, int]],
                            nrows: int) -> "IntMatrix":
        m = cls.zeros(nrows, len(cols))
        for j, col in enumerate(cols):
            for i, v in col.items():
                m.data[i][j] = v
        return m

    def copy(self) -> "IntMatrix":
        return IntMatrix([row[:] for row in self.data], ncols=self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.data[ij[0]][ij[1]]

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.data == other.data)

    def __repr__(self) -> str:
        return f"IntMatrix({self.nrows}x{self.ncols})"

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.data]

    def columns_sparse(self) -> list[dict[int, int]]:
        cols: list[dict[int, int]] = [dict() for _ in range(self.ncols)]
        for i, row in enumerate(self.data):
            for j, v in enumerate(row):
                if v:
                    cols[j][i] = v
        return cols

    def apply(self, vec: Sequence[int]) -> list[int]:
        """Matrix times column vector."""
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match column count")
        return [sum(a * v for a, v in zip(row, vec) if a and v) or 0
                for row in self.data]

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = IntMatrix.zeros(self.nrows, other.ncols)
        for i, row in enumerate(self.data):
            orow = out.data[i]
            for k, a in enumerate(row):
                if a:
                    brow = other.data[k]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] += a * b
        return out

    def transpose(self) -> "IntMatrix":
        return IntMatrix([list(col) for col in zip(*self.data)] if self.nrows
                         else [], ncols=self.nrows)

    def is_zero(self) -> bool:
        return all(not v for row in self.data for v in row)

    def nnz(self) -> int:
        return sum(1 for row in self.data for v in row if v)


def det_bareiss(A: IntMatrix) -> int:
    """Fraction-free determinant; used for unimodularity checks in tests."""
    n = A.nrows
    if n != A.ncols:
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    m = [row[:] for row in A.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pk - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


class SmithDecomposition:
    """U * A * V = S with U, V unimodular and S = diag(d_1, ..., d_r, 0, ...), d_i | d_{i+1}.

    Uinv and Vinv are tracked alongside so callers can move vectors in and out
    of Smith coordinates without solving anything.  Decompositions produced
    with transforms=False carry only S (the transform slots hold None).
    """

    __slots__ = ("U", "S", "V", "Uinv", "Vinv")

    def __init__(self, U: IntMatrix | None, S: IntMatrix,
                 V: IntMatrix | None, Uinv: IntMatrix | None,
                 Vinv: IntMatrix | None):
        self.U, self.S, self.V, self.Uinv, self.Vinv = U, S, V, Uinv, Vinv

    @property
    def diagonal(self) -> list[int]:
        n = min(self.S.nrows, self.S.ncols)
        return [self.S.data[i][i] for i in range(n)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def invariant_factors(self) -> list[int]:
        """Nonzero diagonal entries (the full chain, including 1s)."""
        return [d for d in self.diagonal if d]

    def nontrivial_factors(self) -> list[int]:
        return [d for d in self.diagonal if d > 1]


def _find_pivot(S: list[list[int]], k: int, nrows: int, ncols: int):
    """Smallest |value| in S[k:, k:], ties by lowest (row, col).  None if all zero."""
    best = None
    best_val = None
    for i in range(k, nrows):
        row = S[i]
        for j in range(k, ncols):
            v = row[j]
            if v:
                a = -v if v < 0 else v
                if best_val is None or a < best_val:
                    best_val = a
                    best = (i, j)
                    if a == 1:
                        return best
    return best


def smith_normal_form(A: IntMatrix, transforms: bool = True
                      ) -> SmithDecomposition:
    """Smith normal form with the deterministic pivot rule.

    With transforms=False only S is computed; the U/V bookkeeping is skipped,
    which matters when ncols is huge and only the diagonal is wanted.
    """
    nrows, ncols = A.nrows, A.ncols
    S = [row[:] for row in A.data]
    if transforms:
        U = IntMatrix.identity(nrows).data
        Uinv = IntMatrix.identity(nrows).data
        V = IntMatrix.identity(ncols).data
        Vinv = IntMatrix.identity(ncols).data

    # Row op r_i -= q*r_k mirrors in U; Uinv gets the inverse column op.
    def row_sub(i: int, k: int, q: int) -> None:
        if not q:
            return
        Si, Sk = S[i], S[k]
        for j in range(ncols):
            if Sk[j]:
                Si[j] -= q * Sk[j]
        if not transforms:
            return
        Ui, Uk = U[i], U[k]
        for j in range(nrows):
            if Uk[j]:
                Ui[j] -= q * Uk[j]
        for r in range(nrows):
            Ur = Uinv[r]
            if Ur[i]:
                Ur[k] += q * Ur[i]

    def row_swap(i: int, k: int) -> None:
        if i == k:
            return
        S[i], S[k] = S[k], S[i]
        if not transforms:
            return
        U[i], U[k] = U[k], U[i]
        for r in range(nrows):
            Ur = Uinv[r]
            Ur[i], Ur[k] = Ur[k], Ur[i]

    def row_negate(i: int) -> None:
        S[i] = [-v for v in S[i]]
        if not transforms:
            return
        U[i] = [-v for v in U[i]]
        for r in range(nrows):
            Uinv[r][i] = -Uinv[r][i]

    def col_sub(j: int, k: int, q: int) -> None:
        if not q:
            return
        for r in range(nrows):
            Sr = S[r]
            if Sr[k]:
                Sr[j] -= q * Sr[k]
        if not transforms:
            return
        for r in range(ncols):
            Vr = V[r]
            if Vr[k]:
                Vr[j] -= q * Vr[k]
        Vk, Vj = Vinv[k], Vinv[j]
        for c in range(ncols):
            if Vj[c]:
                Vk[c] += q * Vj[c]

    def col_swap(j: int, k: int) -> None:
        if j == k:
            return
        for r in range(nrows):
            Sr = S[r]
            Sr[j], Sr[k] = Sr[k], Sr[j]
        if not transforms:
            return
        for r in range(ncols):
            Vr = V[r]
            Vr[j], Vr[k] = Vr[k], Vr[j]
        Vinv[j], Vinv[k] = Vinv[k], Vinv[j]

    n = min(nrows, ncols)
    k = 0
    while k < n:
        pos = _find_pivot(S, k, nrows, ncols)
        if pos is None:
            break
        row_swap(pos[0], k)
        col_swap(pos[1], k)
        while True:
            # clear column k below the pivot
            progressed = False
            for i in range(k + 1, nrows):
                if S[i][k]:
                    q = S[i][k] // S[k][k]
                    row_sub(i, k, q)
                    if S[i][k]:
                        row_swap(i, k)  # remainder is smaller; make it the pivot
                        progressed = True
            if progressed:
                continue
            for j in range(k + 1, ncols):
                if S[k][j]:
                    q = S[k][j] // S[k][k]
                    col_sub(j, k, q)
                    if S[k][j]:
                        col_swap(j, k)
                        progressed = True
            if progressed:
                continue
            if any(S[i][k] for i in range(k + 1, nrows)):
                continue  # column was disturbed by col ops; clear again
            break
        if S[k][k] < 0:
            row_negate(k)
        # pivot must divide every remaining entry for the divisibility chain
        d = S[k][k]
        fixed = True
        for i in range(k + 1, nrows):
            Si = S[i]
            for j in range(k + 1, ncols):
                if Si[j] % d:
                    row_sub(k, i, -1)  # fold row i into row k, redo this pivot
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            k += 1
    if not transforms:
        return SmithDecomposition(None, IntMatrix(S, ncols=ncols),
                                  None, None, None)
    return SmithDecomposition(IntMatrix(U), IntMatrix(S, ncols=ncols),
                              IntMatrix(V), IntMatrix(Uinv), IntMatrix(Vinv))


def lll_reduce_rows(rows: list[list[int]]) -> list[list[int]]:
    """LLL-reduce a list of independent integer rows (same lattice, short basis).

    Thin wrapper over sympy's exact integer LLL.  Used to keep computed
    resolution differentials small; entry growth otherwise compounds from one
    syzygy degree to the next.
    """
    if len(rows) <= 1:
        return [list(r) for r in rows]
    from sympy import ZZ
    from sympy.polys.matrices import DomainMatrix
    reduced = DomainMatrix.from_list([[int(v) for v in r] for r in rows], ZZ).lll()
    return [[int(v) for v in r] for r in reduced.to_list()]


def kernel_basis(A: IntMatrix) -> list[list[int]]:
    """A basis of the integer kernel {x : A x = 0}.

    Read off the column Hermite form A*V = [H|0]: the transform columns over
    the zero block are a kernel basis.  One-sided column operations keep the
    basis vectors far smaller than the two-sided Smith transforms would.
    """
    solver = IntegerSolver(A)
    rank = len(solver.pivots)
    out = []
    for j in range(rank, A.ncols):
        assert not any(solver.hcols[j]), "nonpivot column not cleared"
        out.append(solver.vcols[j][:])
    return out


class NoSolutionType:
    """Sentinel for an inconsistent integer linear system (a value, not an exception)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NoSolution"

    def __bool__(self) -> bool:
        return False


NoSolution = NoSolutionType()


class IntegerSolver:
    """Factor A once (column Hermite form A*V = H), then solve A x = b repeatedly.

    solve() returns a particular solution or NoSolution.  Every returned
    solution is verified by multiplying back; failure to verify is a bug.
    """

    __slots__ = ("nrows", "ncols", "hcols", "vcols", "pivots", "_acols")

    def __init__(self, A: IntMatrix):
        self.nrows, self.ncols = A.nrows, A.ncols
        self._acols = [A.column(j) for j in range(A.ncols)]
        hcols = [col[:] for col in self._acols]
        vcols = [[1 if i == j else 0 for i in range(A.ncols)]
                 for j in range(A.ncols)]
        self.pivots: list[tuple[int, int]] = []
        c = 0
        for r in range(A.nrows):
            if c >= A.ncols:
                break
            live = [j for j in range(c, A.ncols) if hcols[j][r]]
            if not live:
                continue
            # gcd-combine live columns into a single pivot at column c
            while len(live) > 1:
                live.sort(key=lambda j: (abs(hcols[j][r]), j))
                j0 = live[0]
                nxt = []
                for j in live[1:]:
                    q = hcols[j][r] // hcols[j0][r]
                    if q:
                        hj, h0 = hcols[j], hcols[j0]
                        for i in range(r, A.nrows):
                            if h0[i]:
                                hj[i] -= q * h0[i]
                        vj, v0 = vcols[j], vcols[j0]
                        for i in range(A.ncols):
                            if v0[i]:
                                vj[i] -= q * v0[i]
                    if hcols[j][r]:
                        nxt.append(j)
                live = [j0] + nxt
            j0 = live[0]
            if j0 != c:
                hcols[j0], hcols[c] = hcols[c], hcols[j0]
                vcols[j0], vcols[c] = vcols[c], vcols[j0]
            if hcols[c][r] < 0:
                hcols[c] = [-v for v in hcols[c]]
                vcols[c] = [-v for v in vcols[c]]
            self.pivots.append((r, c))
            c += 1
        self.hcols = hcols
        self.vcols = vcols

    def solve(self, b: Sequence[int]):
        """A particular x with A x = b, or NoSolution."""
        if len(b) != self.nrows:
            raise ValueError("right-hand side has wrong length")
        resid = list(b)
        y: list[tuple[int, int]] = []
        for r, c in self.pivots:
            v = resid[r]
            if v:
                piv = self.hcols[c][r]
                if v % piv:
                    return NoSolution
                t = v // piv
                y.append((c, t))
                hc = self.hcols[c]
                for i in range(r, self.nrows):
                    if hc[i]:
                        resid[i] -= t * hc[i]
        if any(resid):
            return NoSolution
        x = [0] * self.ncols
        for c, t in y:
            vc = self.vcols[c]
            for i in range(self.ncols):
                if vc[i]:
                    x[i] += t * vc[i]
        # re-multiply; a wrong particular solution is an internal bug
        for i in range(self.nrows):
            s = 0
            for j, xv in enumerate(x):
                if xv:
                    s += self._acols[j][i] * xv
            assert s == b[i], "solver self-check failed"
        return x

    @property
    def rank(self) -> int:
        return len(self.pivots)


def solve_linear(A: IntMatrix, b: Sequence[int]):
    """One-shot A x = b over Z.  Returns a solution list or NoSolution."""
    return IntegerSolver(A).solve(b)


# -- sparse elimination ------------------------------------------------------

class IntegerLattice:
    """A subgroup of Z^n kept as an echelon basis of sparse rows.

    Rows are dicts {col: value} keyed by their leading (lowest) column.  add()
    inserts a vector, combining with existing rows by extended gcd; contains()
    tests exact membership (divisibility at every leading position).
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, vec: dict[int, int]) -> bool:
        """Insert a vector; returns True if the lattice grew (rank or index)."""
        vec = {j: v for j, v in vec.items() if v}
        changed = False
        while vec:
            j = min(vec)
            row = self.rows.get(j)
            if row is None:
                if vec[j] < 0:
                    vec = {k: -v for k, v in vec.items()}
                self.rows[j] = vec
                changed = True
                break
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = _row_combine(vec, row, -q)
            else:
                g, x, y = xgcd(a, b)
                # new pivot row with leading entry g; nonpivot combination continues
                new_row = _row_scale_add(row, x, vec, y)
                vec = _row_combine(vec, row, None, scale=(a // g, -(b // g)))
                self.rows[j] = new_row
                changed = True
        if changed:
            self._reduce()
        return changed

    def _reduce(self) -> None:
        # keep every entry under a pivot column balanced-reduced mod that
        # pivot; left unchecked, echelon entry growth is exponential in rank
        leads = sorted(self.rows)
        for i, ji in enumerate(leads):
            row = self.rows[ji]
            for jm in leads[i + 1:]:
                v = row.get(jm)
                if v is not None:
                    p = self.rows[jm][jm]
                    r = v % p
                    if 2 * r > p:
                        r -= p
                    q = (v - r) // p
                    if q:
                        row = _row_combine(row, self.rows[jm], -q)
            self.rows[ji] = row

    def contains(self, vec: dict[int, int]) -> bool:
        vec = {j: v for j, v in vec.items() if v}
        while vec:
            j = min(vec)
            row = self.rows.get(j)
            if row is None or vec[j] % row[j]:
                return False
            vec = _row_combine(vec, row, -(vec[j] // row[j]))
        return True

    def basis_rows(self) -> list[dict[int, int]]:
        return [dict(self.rows[j]) for j in sorted(self.rows)]


def _row_combine(vec: dict[int, int], row: dict[int, int], q,
                 scale: tuple[int, int] | None = None) -> dict[int, int]:
    """vec + q*row, or scale=(s, t): s*vec + t*row.  Drops zeros."""
    if scale is not None:
        s, t = scale
        out = {j: s * v for j, v in vec.items()}
        for j, v in row.items():
            out[j] = out.get(j, 0) + t * v
    else:
        out = dict(vec)
        for j, v in row.items():
            out[j] = out.get(j, 0) + q * v
    return {j: v for j, v in out.items() if v}


def _row_scale_add(r1: dict[int, int], x: int, r2: dict[int, int],
                   y: int) -> dict[int, int]:
    out = {j: x * v for j, v in r1.items()}
    for j, v in r2.items():
        out[j] = out.get(j, 0) + y * v
    return {j: v for j, v in out.items() if v}


def _sparse_eliminate(cols: Iterable[dict[int, int]], nrows: int,
                      density_threshold: float):
    """Split off +/-1 pivots from a sparse matrix given by columns.

    Returns (unit_pivots, residual_rows) where the original matrix is
    equivalent to diag(1,...,1) (unit_pivots of them) plus the residual.
    Deduplicates columns first; duplicate columns never change the column
    lattice, hence neither rank nor invariant factors.
    """
    seen: set[tuple[tuple[int, int], ...]] = set()
    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    ncols = 0
    for col in cols:
        col = {i: v for i, v in col.items() if v}
        if not col:
            continue
        key = tuple(sorted(col.items()))
        if key in seen:
            continue
        seen.add(key)
        j = ncols
        ncols += 1
        col_rows[j] = set()
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
            col_rows[j].add(i)
    del seen

    import heapq
    heap = [(len(r), i) for i, r in rows.items()]
    heapq.heapify(heap)
    stamp = {i: len(r) for i, r in rows.items()}
    nnz = sum(len(r) for r in rows.values())
    pivots = 0
    stuck: list[int] = []

    while heap:
        ln, i = heapq.heappop(heap)
        row = rows.get(i)
        if row is None or stamp.get(i) != ln or ln != len(row):
            continue
        # find a +/-1 entry, preferring emptiest column, lowest index
        best = None
        for j, v in row.items():
            if v == 1 or v == -1:
                key = (len(col_rows[j]), j)
                if best is None or key < best[0]:
                    best = (key, j, v)
        if best is None:
            stuck.append(i)
            continue
        _, j, v = best
        # clear column j with row i, then drop both (the implicit column
        # operations touch nothing else because column j is now singleton)
        for i2 in list(col_rows[j]):
            if i2 == i:
                continue
            r2 = rows[i2]
            q = r2[j] * v  # v in {1,-1}: q = r2[j] / v
            for jj, vv in row.items():
                new = r2.get(jj, 0) - q * vv
                if new:
                    if jj not in r2:
                        col_rows[jj].add(i2)
                        nnz += 1
                    r2[jj] = new
                elif jj in r2:
                    del r2[jj]
                    col_rows[jj].discard(i2)
                    nnz -= 1
            if r2:
                stamp[i2] = len(r2)
                heapq.heappush(heap, (len(r2), i2))
            else:
                del rows[i2]
                stamp.pop(i2, None)
        for jj in row:
            col_rows[jj].discard(i)
            if not col_rows[jj]:
                del col_rows[jj]
        nnz -= len(row)
        del rows[i]
        stamp.pop(i, None)
        col_rows.pop(j, None)
        pivots += 1
        if stuck:
            for s in stuck:
                if s in rows:
                    stamp[s] = len(rows[s])
                    heapq.heappush(heap, (len(rows[s]), s))
            stuck.clear()
        nr, nc = len(rows), len(col_rows)
        if nr and nc:
            if nnz > density_threshold * nr * nc and nr * nc < 1 << 22:
                break  # dense fallback is now cheaper than fighting fill-in
    return pivots, list(rows.values())


def _residual_to_dense(rrows: list[dict[int, int]]) -> IntMatrix:
    cols_present = sorted({j for r in rrows for j in r})
    remap = {j: k for k, j in enumerate(cols_present)}
    data = [[0] * len(cols_present) for _ in rrows]
    for i, r in enumerate(rrows):
        for j, v in r.items():
            data[i][remap[j]] = v
    return IntMatrix(data, ncols=len(cols_present))


def sparse_invariant_factors(cols: Iterable[dict[int, int]], nrows: int,
                             density_threshold: float = DENSE_FALLBACK_DENSITY
                             ) -> tuple[int, list[int]]:
    """(rank, nontrivial invariant factors > 1) of the matrix with the given columns.

    The unit pivots split off by sparse elimination contribute invariant
    factor 1 each; the dense Smith form of the residual supplies the rest.
    """
    pivots, rrows = _sparse_eliminate(cols, nrows, density_threshold)
    if not rrows:
        return pivots, []
    dec = smith_normal_form(_residual_to_dense(rrows), transforms=False)
    return pivots + dec.rank, dec.nontrivial_factors()


def sparse_rank(cols: Iterable[dict[int, int]], nrows: int) -> int:
    return sparse_invariant_factors(cols, nrows)[0]


def minor_gcd_invariant_factors(A: IntMatrix) -> list[int]:
    """Invariant factors via gcds of k x k minors; an oracle for small matrices.

    d_1 * ... * d_k equals the gcd of all k x k minors.  Exponential; only for
    cross-checking the elimination code on dimensions <= 5 or so.
    """
    from itertools import combinations
    n = min(A.nrows, A.ncols)
    factors = []
    prev = 1
    for k in range(1, n + 1):
        g = 0
        for rows in combinations(range(A.nrows), k):
            for cols in combinations(range(A.ncols), k):
                sub = IntMatrix([[A.data[i][j] for j in cols] for i in rows])
                g = _gcd(g, det_bareiss(sub))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return factors


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a
