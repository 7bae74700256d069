"""Free resolutions of Z over the group ring, and the join construction.

A Resolution holds ranks r_0..r_n, differentials d_k: P_k -> P_{k-1} as
ZGMatrices of shape r_{k-1} x r_k, and an integer augmentation row for
eps: P_0 -> Z.  The constructor insists on d o d = 0 and eps o d_1 = 0;
``validate_resolution`` additionally certifies exactness degree by degree
from ranks and invariant factors of the integer expansions.

Three constructors are provided:

* ``periodic_cyclic_resolution``: the rank-1 two-periodic resolution for a
  cyclic group, differentials alternating between t-1 and the norm.
* ``bar_resolution``: the normalized bar resolution of any group, rank
  (|G|-1)^k in degree k.  General but exponentially large.
* ``syzygy_resolution``: a computed resolution of any small group; each
  differential's columns are module generators of the previous kernel, found
  by covering the integer kernel lattice with group orbits.  Ranks stay far
  smaller than the bar resolution's, which is what makes deep degrees
  reachable for the nonabelian test groups.

The join P*Q is the suspension of the tensor product over Z with the
diagonal group action.  Degree d of the join is the direct sum over
0 <= k <= d+1 of P_{k-1} (x) Q_{d-k}, with the convention P_{-1} = Q_{-1} = Z
in degree -1.  Each middle summand is a free module on basis vectors
e_i (x) g.f_j (the second-factor twist), so its rank is
rank(P_{k-1}) * |G| * rank(Q_{d-k}).  The boundary follows the suspension
sign rule: on x (x) s it is dx (x) s + (-1)^{|x|+1} x (x) ds, where |x| is
the P-degree, the Z factor sits in degree -1, and the boundary out of degree
0 is the augmentation.
"""

from __future__ import annotations

import json
import os
from typing import Sequence

from .errors import ResolutionError, SchemaError, SizeBudgetError
from .groups import (FiniteGroup, GroupRingElement, build_group)
from .intlinalg import (IntMatrix, IntegerLattice, kernel_basis,
                        lll_reduce_rows, sparse_invariant_factors)
from .zglinalg import ZGMatrix, check_zrank, flatten_vector, unflatten_vector


class Resolution:
    """An augmented free resolution of Z over Z[G], exact through its depth.

    ranks[k] is the Z[G]-rank in degree k (0 <= k <= depth); differential(k)
    is d_k for 1 <= k <= depth; augmentation is the integer row vector with
    eps(g . e_i) = augmentation[i].
    """

    __slots__ = ("group", "ranks", "diffs", "aug", "label", "_down", "_hcache")

    def __init__(self, group: FiniteGroup, ranks: Sequence[int],
                 diffs: Sequence[ZGMatrix], augmentation: Sequence[int],
                 label: str = "res"):
        self.group = group
        self.ranks = tuple(int(r) for r in ranks)
        self.diffs = tuple(diffs)
        self.aug = tuple(int(a) for a in augmentation)
        self.label = label
        self._down: dict[int, IntMatrix] = {}
        self._hcache: dict = {}  # homology-side caches, see tate module
        if not self.ranks or any(r < 0 for r in self.ranks):
            raise ResolutionError("ranks must be a nonempty list of nonnegative integers")
        if len(self.diffs) != len(self.ranks) - 1:
            raise ResolutionError(
                f"expected {len(self.ranks) - 1} differentials for "
                f"{len(self.ranks)} ranks, got {len(self.diffs)}")
        if len(self.aug) != self.ranks[0]:
            raise ResolutionError("augmentation length must equal rank in degree 0")
        for k, d in enumerate(self.diffs, start=1):
            if d.group != group:
                raise ResolutionError(f"differential {k} has the wrong group")
            if (d.nrows, d.ncols) != (self.ranks[k - 1], self.ranks[k]):
                raise ResolutionError(
                    f"differential {k} has shape {d.nrows}x{d.ncols}, "
                    f"expected {self.ranks[k - 1]}x{self.ranks[k]}")
        # eps o d_1 = 0
        if self.depth >= 1:
            d1 = self.diffs[0]
            for j in range(d1.ncols):
                s = sum(self.aug[i] * v.augmentation()
                        for i, v in d1.column(j).items())
                if s:
                    raise ResolutionError(
                        f"augmentation does not kill differential 1 (column {j})")
        # d_{k-1} o d_k = 0
        for k in range(2, self.depth + 1):
            if not self.diffs[k - 2].compose(self.diffs[k - 1]).is_zero():
                raise ResolutionError(
                    f"differentials do not compose to zero at degree {k}")

    @property
    def depth(self) -> int:
        return len(self.ranks) - 1

    def rank(self, k: int) -> int:
        if not 0 <= k <= self.depth:
            raise ResolutionError(f"degree {k} outside 0..{self.depth}")
        return self.ranks[k]

    def differential(self, k: int) -> ZGMatrix:
        if not 1 <= k <= self.depth:
            raise ResolutionError(f"no differential at degree {k} (depth {self.depth})")
        return self.diffs[k - 1]

    def apply_differential(self, k: int, vec: Sequence[GroupRingElement]
                           ) -> list[GroupRingElement]:
        return self.differential(k).apply(vec)

    def augment(self, vec: Sequence[GroupRingElement]) -> int:
        """eps applied to an element of P_0."""
        assert len(vec) == self.ranks[0]
        return sum(a * v.augmentation() for a, v in zip(self.aug, vec))

    def zero_chain(self, k: int) -> list[GroupRingElement]:
        return [GroupRingElement.zero(self.group) for _ in range(self.rank(k))]

    def down_matrix(self, k: int) -> IntMatrix:
        """The integer matrix of d_k on the tensored-down complex P (x)_{Z[G]} Z.

        Tensoring with the trivial module replaces each group-ring entry by
        its augmentation; ranks are unchanged.
        """
        m = self._down.get(k)
        if m is None:
            d = self.differential(k)
            m = IntMatrix.zeros(d.nrows, d.ncols)
            for (i, j), val in d.entries.items():
                m.data[i][j] = val.augmentation()
            self._down[k] = m
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, Resolution):
            return NotImplemented
        return (self.group == other.group and self.ranks == other.ranks
                and self.aug == other.aug and self.diffs == other.diffs)

    def __hash__(self) -> int:
        # coarse but consistent with __eq__ (differentials left out)
        return hash((self.group, self.ranks, self.aug))

    def __repr__(self) -> str:
        return (f"Resolution({self.label!r}, {self.group.label}, "
                f"depth={self.depth}, ranks={list(self.ranks)})")

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "ranks": list(self.ranks),
            "differentials": [
                [[list(d.get(i, j).c) for j in range(d.ncols)]
                 for i in range(d.nrows)]
                for d in self.diffs],
            "augmentation": list(self.aug),
        }

    def save(self, path: str) -> None:
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(self.to_json(), fh, sort_keys=True, separators=(",", ":"))
            fh.write("\n")
        os.replace(tmp, path)

    @classmethod
    def from_json(cls, obj: dict, label: str = "loaded") -> "Resolution":
        if not isinstance(obj, dict):
            raise SchemaError("resolution JSON must be an object")
        for key in ("group", "ranks", "differentials", "augmentation"):
            if key not in obj:
                raise SchemaError(f"resolution JSON is missing {key!r}")
        group = build_group(obj["group"])
        ranks = obj["ranks"]
        raw = obj["differentials"]
        if len(raw) != len(ranks) - 1:
            raise SchemaError("differential count does not match ranks")
        diffs = []
        for k, rows in enumerate(raw, start=1):
            if len(rows) != ranks[k - 1]:
                raise SchemaError(f"differential {k} has wrong row count")
            m = ZGMatrix(group, ranks[k - 1], ranks[k])
            for i, row in enumerate(rows):
                if len(row) != ranks[k]:
                    raise SchemaError(f"differential {k} row {i} has wrong length")
                for j, coeffs in enumerate(row):
                    if len(coeffs) != group.order:
                        raise SchemaError(
                            f"differential {k} entry ({i},{j}) has "
                            f"{len(coeffs)} coefficients, expected {group.order}")
                    m.set(i, j, GroupRingElement(group, coeffs))
            diffs.append(m)
        return cls(group, ranks, diffs, obj["augmentation"], label=label)


def load_resolution(path: str, max_zrank: int | None = None) -> Resolution:
    """Load and fully validate a resolution file.

    Validation failures are load errors: the file must satisfy d o d = 0,
    eps o d_1 = 0, and the exactness certificate at every degree.
    """
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise SchemaError(f"{path} is not valid JSON: {e}") from e
    try:
        res = Resolution.from_json(obj, label=os.path.basename(path))
    except ResolutionError as e:
        raise ResolutionError(f"{path}: {e}") from e
    report = validate_resolution(res, max_zrank=max_zrank)
    if not report.passed:
        raise ResolutionError(f"{path}: {report.first_failure}")
    return res


class ValidationReport:
    """Outcome of validate_resolution: one named pass/fail line per check."""

    __slots__ = ("checks",)

    def __init__(self):
        self.checks: list[dict] = []

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append({"name": name, "passed": bool(passed),
                            "detail": detail})

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    @property
    def first_failure(self) -> str:
        for c in self.checks:
            if not c["passed"]:
                return f"{c['name']}: {c['detail'] or 'failed'}"
        return ""

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": self.checks}

    def __repr__(self) -> str:
        good = sum(1 for c in self.checks if c["passed"])
        return f"ValidationReport({good}/{len(self.checks)} passed)"


def validate_resolution(res: Resolution,
                        max_zrank: int | None = None) -> ValidationReport:
    """Certify the resolution invariants degree by degree.

    Beyond re-checking d o d = 0 and eps o d_1 = 0, exactness of

        ... -> P_1 -> P_0 -> Z -> 0

    is certified on the integer expansion: eps is onto (entry gcd 1); at
    degree 0, rank z(d_1) = |G| r_0 - 1 with all invariant factors 1; at each
    middle degree k, rank z(d_k) + rank z(d_{k+1}) = |G| r_k with all
    invariant factors of z(d_{k+1}) equal to 1.  Equal ranks make the image a
    finite-index sublattice of the kernel and unit factors make it saturated,
    so together they force image = kernel exactly.
    """
    report = ValidationReport()
    G = res.group
    order = G.order
    check_zrank(G, res.ranks, max_zrank, what="resolution validation")

    # (re)check the complex identities; constructor enforced them, but loaded
    # or doctored objects come through here for a named report.
    aug_ok = True
    if res.depth >= 1:
        d1 = res.differential(1)
        for j in range(d1.ncols):
            if sum(res.aug[i] * v.augmentation()
                   for i, v in d1.column(j).items()):
                aug_ok = False
                break
    report.record("eps o d_1 = 0", aug_ok)
    for k in range(2, res.depth + 1):
        ok = res.differential(k - 1).compose(res.differential(k)).is_zero()
        report.record(f"d_{k - 1} o d_{k} = 0", ok,
                      "" if ok else f"composition nonzero at degree {k}")

    # augmentation onto Z
    g = 0
    for a in res.aug:
        g = _gcd(g, a)
    report.record("augmentation onto Z", g == 1,
                  "" if g == 1 else f"gcd of augmentation entries is {g}")

    ranks_z = {}
    factors_unit = {}
    for k in range(1, res.depth + 1):
        cols = res.differential(k).z_columns()
        rank, nontrivial = sparse_invariant_factors(cols, res.ranks[k - 1] * order)
        ranks_z[k] = rank
        factors_unit[k] = not nontrivial
    # exactness at degree 0: im d_1 = ker eps
    if res.depth >= 1:
        want = res.ranks[0] * order - 1
        ok = ranks_z[1] == want and factors_unit[1]
        report.record("exact at degree 0", ok,
                      "" if ok else
                      f"rank z(d_1) = {ranks_z[1]}, expected {want}; "
                      f"unit factors: {factors_unit[1]}")
    # exactness at middle degrees
    for k in range(1, res.depth):
        middle = res.ranks[k] * order
        ok = (ranks_z[k] + ranks_z[k + 1] == middle) and factors_unit[k + 1]
        report.record(f"exact at degree {k}", ok,
                      "" if ok else
                      f"rank z(d_{k}) + rank z(d_{k + 1}) = "
                      f"{ranks_z[k]} + {ranks_z[k + 1]} != {middle} "
                      f"or nonunit factors in z(d_{k + 1})")
    return report


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


# -- constructors -------------------------------------------------------------

def periodic_cyclic_resolution(m: int, n: int) -> Resolution:
    """The two-periodic rank-1 resolution of Z over Z[C_m].

    d_k = t - 1 for odd k and the norm for even k; exact because multiples
    of the norm are exactly the elements killed by t - 1 and vice versa.
    """
    if m < 2:
        raise ResolutionError("periodic resolution needs a cyclic group of order >= 2")
    if n < 0:
        raise ResolutionError("depth must be nonnegative")
    G = build_group(f"cyclic:{m}")
    t_minus_1 = (GroupRingElement.basis(G, 1)
                 - GroupRingElement.one(G))
    norm = GroupRingElement(G, (1,) * m)
    diffs = []
    for k in range(1, n + 1):
        d = ZGMatrix(G, 1, 1)
        d.set(0, 0, t_minus_1 if k % 2 == 1 else norm)
        diffs.append(d)
    return Resolution(G, [1] * (n + 1), diffs, [1], label=f"periodic(C{m})")


def bar_resolution(group: FiniteGroup, n: int,
                   max_zrank: int | None = None) -> Resolution:
    """The normalized bar resolution to depth n: rank (|G|-1)^k in degree k.

    Degree-k basis elements are the k-tuples of nonidentity group elements
    [g_1|...|g_k], ordered lexicographically.  The boundary is

        d[g_1|...|g_k] = g_1 [g_2|...|g_k]
                         + sum_i (-1)^i [g_1|...|g_i g_{i+1}|...|g_k]
                         + (-1)^k [g_1|...|g_{k-1}]

    with any bracket containing the identity dropped (the normalization).
    """
    if n < 0:
        raise ResolutionError("depth must be nonnegative")
    w = group.order
    ranks = [(w - 1) ** k for k in range(n + 1)]
    check_zrank(group, ranks, max_zrank, what=f"bar resolution of {group.label}")
    nonid = list(range(1, w))

    def tuple_index(tup):
        # lexicographic rank of a tuple of nonidentity elements
        idx = 0
        for g in tup:
            idx = idx * (w - 1) + (g - 1)
        return idx

    def tuples(k):
        if k == 0:
            yield ()
            return
        for prefix in tuples(k - 1):
            for g in nonid:
                yield prefix + (g,)

    diffs = []
    for k in range(1, n + 1):
        d = ZGMatrix(group, ranks[k - 1], ranks[k])
        for col, tup in enumerate(tuples(k)):
            acc: dict[int, list[int]] = {}

            def put(row, g, v):
                c = acc.get(row)
                if c is None:
                    c = acc[row] = [0] * w
                c[g] += v

            put(tuple_index(tup[1:]), tup[0], 1)
            sign = -1
            for i in range(k - 1):
                merged = group.table[tup[i]][tup[i + 1]]
                if merged != 0:
                    put(tuple_index(tup[:i] + (merged,) + tup[i + 2:]), 0, sign)
                sign = -sign
            put(tuple_index(tup[:-1]), 0, sign)
            for row, coeffs in acc.items():
                d.set(row, col, GroupRingElement(group, coeffs))
        diffs.append(d)
    return Resolution(group, ranks, diffs, [1], label=f"bar({group.label})")


def syzygy_resolution(group: FiniteGroup, n: int,
                      max_zrank: int | None = None) -> Resolution:
    """A computed low-rank resolution: each differential covers the previous kernel.

    Degree k+1 generators are found by taking an integer kernel basis of the
    expanded d_k, computing the sublattice each vector's group orbit spans,
    and greedily accumulating orbits (largest first) until the whole kernel
    lattice is covered; a reverse-delete pass then drops redundant
    generators.  Covering the full kernel lattice, not merely a finite-index
    sublattice, is exactly degreewise exactness, so the result passes the
    same certificate as any other resolution.  Generator counts are not
    guaranteed minimal, only small.
    """
    if n < 0:
        raise ResolutionError("depth must be nonnegative")
    order = group.order
    ranks = [1]
    diffs: list[ZGMatrix] = []
    # kernel of eps on z-coordinates: the augmentation ideal
    prev_z = IntMatrix([[1] * order])
    for k in range(1, n + 1):
        gens = _cover_kernel_with_orbits(group, prev_z, ranks[k - 1])
        check_zrank(group, [max(len(gens), 1)], max_zrank,
                    what=f"computed resolution of {group.label} at degree {k}")
        d = ZGMatrix(group, ranks[k - 1], len(gens))
        for j, vec in enumerate(gens):
            for i, val in enumerate(vec):
                d.set(i, j, val)
        ranks.append(len(gens))
        diffs.append(d)
        prev_z = IntMatrix.from_sparse_columns(d.z_columns(),
                                               ranks[k - 1] * order)
    return Resolution(group, ranks, diffs, [1],
                      label=f"computed({group.label})")


def _cover_kernel_with_orbits(group: FiniteGroup, z_matrix: IntMatrix,
                              rank_above: int) -> list[list[GroupRingElement]]:
    """Module generators for the kernel of a Z[G]-map given by its z-expansion.

    Returns Z[G]-column vectors (length rank_above) whose orbits span the
    integer kernel lattice of z_matrix exactly.
    """
    order = group.order
    kbasis = kernel_basis(z_matrix)
    if not kbasis:
        return []

    def orbit_of_flat(flat):
        vec = unflatten_vector(flat, group, rank_above)
        return [flatten_vector([a.left_translate(g) for a in vec], group)
                for g in range(order)]

    # Candidates are reduced-echelon rows of the full kernel lattice, fed
    # with every group translate of every kernel basis vector (shortest
    # first).  The kernel is G-stable, so the lattice is unchanged, but the
    # reduction keeps candidate entries small; raw Hermite kernel vectors
    # compound in size from one degree to the next.
    full = IntegerLattice()
    by_size = sorted(kbasis, key=lambda v: (max(abs(x) for x in v),
                                            sum(1 for x in v if x),
                                            v))
    for v in by_size:
        for flat in orbit_of_flat(v):
            full.add({i: x for i, x in enumerate(flat) if x})
    ncols = z_matrix.ncols
    dense = []
    for row in full.basis_rows():
        flat = [0] * ncols
        for i, x in row.items():
            flat[i] = x
        dense.append(flat)
    # Echelon reduction alone cannot bound entries away from the pivot
    # columns; LLL can, and keeps generators small at every degree.
    dense = lll_reduce_rows(dense)
    dense.sort(key=lambda v: (max(abs(x) for x in v),
                              sum(1 for x in v if x), v))
    candidates = [unflatten_vector(flat, group, rank_above) for flat in dense]

    def orbit_flat(vec):
        return [flatten_vector([a.left_translate(g) for a in vec], group)
                for g in range(order)]

    orbits = [orbit_flat(v) for v in candidates]

    cand_sparse = [{i: v for i, v in enumerate(orbits[t][0]) if v}
                   for t in range(len(candidates))]

    def lattice_of(idxs):
        lat = IntegerLattice()
        for t in idxs:
            for flat in orbits[t]:
                lat.add({i: v for i, v in enumerate(flat) if v})
        return lat

    def covers(idxs):
        # candidates span the kernel lattice, so containing them all is
        # containing the kernel; orbit vectors never leave it
        lat = lattice_of(idxs)
        return all(lat.contains(c) for c in cand_sparse)

    orbit_rank = [lattice_of([t]).rank for t in range(len(candidates))]
    order_pref = sorted(range(len(candidates)),
                        key=lambda t: (-orbit_rank[t], t))
    chosen: list[int] = []
    lat = IntegerLattice()
    for t in order_pref:
        if not lat.contains(cand_sparse[t]):
            chosen.append(t)
            for f in orbits[t]:
                lat.add({i: v for i, v in enumerate(f) if v})
    assert covers(chosen), "orbit cover missed part of the kernel lattice"
    # reverse-delete: drop any generator whose orbit is redundant
    for t in list(chosen):
        rest = [s for s in chosen if s != t]
        if rest and covers(rest):
            chosen = rest
    chosen.sort()
    return [candidates[t] for t in chosen]


# -- the join -----------------------------------------------------------------

# Basis index convention for (P*Q)_d: tuples (k, i, g, j) denoting the free
# basis vector e_i (x) g.f_j of the summand P_{k-1} (x) Q_{d-k}.  The Z
# factors use placeholder index -1 and identity g: (0, -1, 0, j) is the
# basis of Z (x) Q_d, and (d+1, i, 0, -1) the basis of P_d (x) Z.

def _join_basis(P: Resolution, Q: Resolution, d: int) -> list[tuple]:
    order = P.group.order
    basis = []
    for j in range(Q.rank(d)):
        basis.append((0, -1, 0, j))
    for k in range(1, d + 1):
        for i in range(P.rank(k - 1)):
            for g in range(order):
                for j in range(Q.rank(d - k)):
                    basis.append((k, i, g, j))
    for i in range(P.rank(d)):
        basis.append((d + 1, i, 0, -1))
    return basis


def join_rank(P: Resolution, Q: Resolution, d: int) -> int:
    """rank (P*Q)_d = sum over summands, |G| wide except at the two Z ends."""
    order = P.group.order
    total = Q.rank(d) + P.rank(d)
    for k in range(1, d + 1):
        total += P.rank(k - 1) * order * Q.rank(d - k)
    return total


class JoinResolution(Resolution):
    """A join P*Q packaged as a Resolution, remembering its factors and bases."""

    __slots__ = ("P", "Q", "bases", "index")

    def __init__(self, P: Resolution, Q: Resolution, ranks, diffs, aug,
                 bases, index):
        self.P = P
        self.Q = Q
        self.bases = bases
        self.index = index
        try:
            super().__init__(P.group, ranks, diffs, aug,
                             label=f"join({P.label},{Q.label})")
        except ResolutionError as e:
            # a broken join differential is a bug in the sign bookkeeping,
            # not a property of user input
            from .errors import InternalCheckError
            raise InternalCheckError(f"join construction: {e}") from e

    def basis(self, d: int) -> list[tuple]:
        return self.bases[d]

    def column_of(self, d: int, key: tuple) -> int:
        return self.index[d][key]


def join(P: Resolution, Q: Resolution, n: int,
         max_zrank: int | None = None) -> JoinResolution:
    """The join resolution P*Q through degree n.

    Requires P and Q to be resolutions of the same group, both of depth at
    least n.  The suspension sign convention and the untwisting convention
    are fixed here once; the constructor's d o d = 0 check guards both.
    """
    if P.group != Q.group:
        raise ResolutionError("join factors must resolve the same group")
    if P.depth < n or Q.depth < n:
        raise ResolutionError(
            f"join to degree {n} needs both factors to depth {n} "
            f"(have {P.depth} and {Q.depth})")
    G = P.group
    order = G.order
    inv = G.inverse
    table = G.table

    ranks = [join_rank(P, Q, d) for d in range(n + 1)]
    check_zrank(G, ranks, max_zrank, what=f"join of {P.label} and {Q.label}")
    bases = [_join_basis(P, Q, d) for d in range(n + 1)]
    for d in range(n + 1):
        assert len(bases[d]) == ranks[d], "basis enumeration disagrees with rank formula"
    index = [{key: c for c, key in enumerate(b)} for b in bases]

    diffs = []
    for d in range(1, n + 1):
        m = ZGMatrix(G, ranks[d - 1], ranks[d])
        tgt = index[d - 1]
        for col, (k, i, g, j) in enumerate(bases[d]):
            acc: dict[int, list[int]] = {}

            def put(key, gelt, v):
                row = tgt[key]
                c = acc.get(row)
                if c is None:
                    c = acc[row] = [0] * order
                c[gelt] += v

            if k == 0:
                # bottom summand Z (x) Q_d: the Q differential verbatim
                dq = Q.differential(d)
                for jp, val in dq.column(j).items():
                    for v, beta in val.support():
                        put((0, -1, 0, jp), v, beta)
            elif k == d + 1:
                # top summand P_d (x) Z: the P differential verbatim
                dp = P.differential(d)
                for ip, val in dp.column(i).items():
                    for u, alpha in val.support():
                        put((d, ip, 0, -1), u, alpha)
            else:
                # middle summand P_{k-1} (x) Q_{d-k}, basis e_i (x) g.f_j
                if k >= 2:
                    dp = P.differential(k - 1)
                    for ip, val in dp.column(i).items():
                        for u, alpha in val.support():
                            # u.e_ip (x) g.f_j = u.(e_ip (x) u^{-1}g.f_j)
                            put((k - 1, ip, table[inv[u]][g], j), u, alpha)
                else:
                    # P-degree 0: boundary into the Z factor via eps
                    put((0, -1, 0, j), g, P.aug[i])
                sign = -1 if k % 2 else 1  # suspension sign (-1)^k
                if d - k >= 1:
                    dq = Q.differential(d - k)
                    for jp, val in dq.column(j).items():
                        for v, beta in val.support():
                            # e_i (x) g.(v.f_jp) stays in summand k
                            put((k, i, table[g][v], jp), 0, sign * beta)
                else:
                    # Q-degree 0: eps of the second factor, into P_{k-1} (x) Z
                    put((d, i, 0, -1), 0, sign * Q.aug[j])
            for row, coeffs in acc.items():
                m.set(row, col, GroupRingElement(G, coeffs))
        diffs.append(m)

    aug = [Q.aug[j] for j in range(Q.rank(0))] + [P.aug[i] for i in range(P.rank(0))]
    return JoinResolution(P, Q, ranks, diffs, aug, bases, index)


def include_cycle_tensor(J: JoinResolution, x: Sequence[GroupRingElement],
                         n: int, y: Sequence[GroupRingElement],
                         m: int) -> list[GroupRingElement]:
    """Coordinates of x (x) y in degree n+m+1 of the join.

    x lives in P_n, y in Q_m.  Untwisting u.e_i (x) v.f_j =
    u.(e_i (x) u^{-1}v.f_j) places coefficient a_u b_v, as a multiple of the
    group element u, on basis (n+1, i, u^{-1}v, j).
    """
    P, Q, G = J.P, J.Q, J.group
    d = n + m + 1
    if d > J.depth:
        raise ResolutionError(
            f"join is built to degree {J.depth}, need degree {d}")
    if len(x) != P.rank(n) or len(y) != Q.rank(m):
        raise ResolutionError("tensor factors have wrong ranks for their degrees")
    order = G.order
    table = G.table
    inv = G.inverse
    idx = J.index[d]
    acc: dict[int, list[int]] = {}
    for i, a in enumerate(x):
        for u, av in a.support():
            for j, b in enumerate(y):
                for v, bv in b.support():
                    row = idx[(n + 1, i, table[inv[u]][v], j)]
                    c = acc.get(row)
                    if c is None:
                        c = acc[row] = [0] * order
                    c[u] += av * bv
    out = J.zero_chain(d)
    for row, coeffs in acc.items():
        out[row] = GroupRingElement(G, coeffs)
    return out
