"""Integral homology of a resolution and the negative-degree correspondence.

Tensoring a resolution down over the group ring (replacing every group-ring
entry by its augmentation) gives the integer complex whose homology is the
group homology H_n.  Invariant factors are read off the boundary matrices:
the torsion of H_n equals the nonunit invariant factors of D_{n+1}, because
the kernel of D_n is a saturated sublattice, and the free rank is
rank ker D_n - rank D_{n+1}.  That needs only ranks and factors, which the
sparse eliminator delivers at bar-resolution scale; the transform-tracked
Smith machinery for classifying cycles and exhibiting generators is built
lazily, only when someone asks.

The degree-(-n-1) groups of the Tate theory are reached through the norm
correspondence: an invariant chain of P_n is exactly a norm N.y, and the
class of y (x) 1 in H_n is the image of the stable map the invariant
represents.  ``phi`` and ``phi_inverse`` implement the two directions;
``is_stably_zero`` is the kernel test (the represented map factors through a
projective iff the class vanishes).
"""

from __future__ import annotations

from typing import Sequence

from .errors import InternalCheckError, ResolutionError, SchemaError
from .groups import GroupRingElement, norm_element
from .intlinalg import (IntMatrix, NoSolution, smith_normal_form,
                        sparse_invariant_factors)
from .resolutions import Resolution
from .zglinalg import ZGMatrix, solve_zg_linear


def down_vector(vec: Sequence[GroupRingElement]) -> list[int]:
    """Image of a chain in P_k (x)_{Z[G]} Z: coordinatewise augmentation."""
    return [a.augmentation() for a in vec]


def lift_vector(res: Resolution, k: int, coords: Sequence[int]
                ) -> list[GroupRingElement]:
    """The identity-coefficient lift of a down-complex vector back to P_k."""
    if len(coords) != res.rank(k):
        raise ResolutionError(f"vector has length {len(coords)}, "
                              f"rank in degree {k} is {res.rank(k)}")
    return [GroupRingElement.basis(res.group, 0, int(c)) for c in coords]


def tensor_down(res: Resolution) -> list[IntMatrix]:
    """The integer chain complex of the resolution: matrices D_1..D_depth."""
    return [res.down_matrix(k) for k in range(1, res.depth + 1)]


def _down_columns(D: IntMatrix) -> list[dict[int, int]]:
    return D.columns_sparse()


def _rank_and_factors(res: Resolution, k: int) -> tuple[int, list[int]]:
    """(rank, nonunit invariant factors) of D_k, cached on the resolution."""
    cache = _cache_of(res)
    key = ("rf", k)
    if key not in cache:
        D = res.down_matrix(k)
        cache[key] = sparse_invariant_factors(_down_columns(D), D.nrows)
    return cache[key]


def _cache_of(res: Resolution) -> dict:
    return res._hcache


class HomologyGroup:
    """H_n of the tensored-down complex, with lazy generator/classify data.

    invariant_factors lists the torsion factors in ascending divisibility
    order followed by one 0 per free summand (0 means a Z summand).  The
    factor list is computed eagerly from ranks alone; generators and the
    classify map trigger the transform-tracked Smith decompositions on first
    use and are cross-checked against the eager factors.
    """

    __slots__ = ("resolution", "degree", "invariant_factors", "_cls")

    def __init__(self, resolution: Resolution, degree: int):
        if degree < 0:
            raise ResolutionError("homology degree must be nonnegative")
        if degree + 1 > resolution.depth:
            raise ResolutionError(
                f"homology in degree {degree} needs the resolution valid "
                f"through degree {degree + 1} (depth is {resolution.depth})")
        self.resolution = resolution
        self.degree = degree
        n = degree
        rank_n = resolution.ranks[n]
        if n == 0:
            ker_rank = rank_n
        else:
            rk_dn, _ = _rank_and_factors(resolution, n)
            ker_rank = rank_n - rk_dn
        rk_im, torsion = _rank_and_factors(resolution, n + 1)
        free = ker_rank - rk_im
        assert free >= 0, "image rank exceeds kernel rank; not a complex?"
        self.invariant_factors = list(torsion) + [0] * free
        self._cls = None

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @property
    def order(self) -> int:
        """Number of elements; 0 means infinite."""
        total = 1
        for d in self.invariant_factors:
            if d == 0:
                return 0
            total *= d
        return total

    @property
    def exponent(self) -> int:
        """Largest factor (the maximal element order); 0 means unbounded."""
        if not self.invariant_factors:
            return 1
        return self.invariant_factors[-1]

    def __repr__(self) -> str:
        if not self.invariant_factors:
            desc = "0"
        else:
            desc = " + ".join("Z" if d == 0 else f"Z/{d}"
                              for d in self.invariant_factors)
        return (f"H_{self.degree}({self.resolution.group.label}) = {desc}")

    # -- classify machinery (lazy) ---------------------------------------

    def _classify_data(self):
        if self._cls is None:
            self._cls = _ClassifyData(self.resolution, self.degree)
            got = self._cls.factors
            want = self.invariant_factors
            assert got == want, (
                f"classify factors {got} disagree with rank-counted {want}")
        return self._cls

    def classify(self, cycle: Sequence[int]) -> tuple[int, ...]:
        """Canonical coordinates of a cycle's class, one per invariant factor.

        Torsion coordinates are reduced mod their factor; the zero class is
        the all-zero tuple; classify(generators[i]) is the i-th unit tuple.
        """
        if not is_cycle(self.resolution, self.degree, cycle):
            raise ResolutionError(
                f"classify: input is not a cycle in degree {self.degree}")
        return self._classify_data().classify(cycle)

    @property
    def generators(self) -> list[list[int]]:
        """One explicit cycle per invariant factor."""
        return self._classify_data().generators

    def class_order(self, coords: Sequence[int]) -> int:
        """Order of the class with the given canonical coordinates (0 = infinite)."""
        order = 1
        for d, c in zip(self.invariant_factors, coords):
            if d == 0:
                if c:
                    return 0
            elif c:
                g = _gcd(d, c)
                order = _lcm(order, d // g)
        return order

    def is_zero_class(self, coords: Sequence[int]) -> bool:
        return not any(coords)


class _ClassifyData:
    """Smith-form coordinates for ker D_n / im D_{n+1}."""

    __slots__ = ("rank_n", "zero_cols", "kmatrix", "vinv_rows", "snf_b",
                 "factors", "generators", "positions")

    def __init__(self, res: Resolution, n: int):
        rank_n = res.ranks[n]
        self.rank_n = rank_n
        if n == 0:
            # no boundary out of degree 0: the kernel is everything
            self.zero_cols = list(range(rank_n))
            self.kmatrix = IntMatrix.identity(rank_n)
            self.vinv_rows = IntMatrix.identity(rank_n)
        else:
            dec = smith_normal_form(res.down_matrix(n))
            diag = dec.diagonal
            self.zero_cols = [j for j in range(rank_n)
                              if j >= len(diag) or diag[j] == 0]
            self.kmatrix = IntMatrix(
                [[dec.V.data[i][j] for j in self.zero_cols]
                 for i in range(rank_n)], ncols=len(self.zero_cols))
            self.vinv_rows = IntMatrix(
                [dec.Vinv.data[j] for j in self.zero_cols], ncols=rank_n)
        kdim = len(self.zero_cols)
        # image of D_{n+1} in kernel coordinates
        Dup = res.down_matrix(n + 1)
        B = self.vinv_rows.mul(Dup)
        self.snf_b = smith_normal_form(B)
        diag_b = self.snf_b.diagonal
        rank_b = sum(1 for d in diag_b if d)
        # positions holds, for each reported factor, its row index in Smith
        # coordinates: torsion rows with d > 1 first, then the free rows
        self.positions = ([p for p in range(rank_b) if diag_b[p] > 1]
                          + list(range(rank_b, kdim)))
        self.factors = ([diag_b[p] for p in range(rank_b) if diag_b[p] > 1]
                        + [0] * (kdim - rank_b))
        gens = []
        for p in self.positions:
            col = self.snf_b.Uinv.column(p)
            gens.append(self.kmatrix.apply(col))
        self.generators = gens

    def kernel_coords(self, cycle: Sequence[int]) -> list[int]:
        if len(cycle) != self.rank_n:
            raise ResolutionError("cycle vector has the wrong length")
        full = self.vinv_rows.apply(list(cycle))
        return full

    def classify(self, cycle: Sequence[int]) -> tuple[int, ...]:
        # verify membership in the kernel: Vinv rows at nonzero factors must
        # vanish; equivalently D_n . cycle = 0, which we check directly.
        c = list(cycle)
        coords = self.kernel_coords(c)
        u = self.snf_b.U.apply(coords)
        diag_b = self.snf_b.diagonal
        out = []
        for p in self.positions:
            if p < len(diag_b) and diag_b[p] > 1:
                out.append(u[p] % diag_b[p])
            else:
                out.append(u[p])
        return tuple(out)


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _lcm(a: int, b: int) -> int:
    return a * b // _gcd(a, b) if a and b else 0


def homology(res: Resolution, n: int) -> HomologyGroup:
    """H_n of the resolution's tensored-down complex (cached per degree)."""
    cache = _cache_of(res)
    key = ("homology", n)
    if key not in cache:
        cache[key] = HomologyGroup(res, n)
    return cache[key]


def is_cycle(res: Resolution, n: int, coords: Sequence[int]) -> bool:
    if n == 0:
        return len(coords) == res.ranks[0]
    return not any(res.down_matrix(n).apply(list(coords)))


class InvariantCycle:
    """A G-invariant cycle of P_n: the chain-level data of a stable map into a syzygy.

    Both defining conditions (killed by the differential, fixed by every
    group element) are checked at construction.
    """

    __slots__ = ("resolution", "degree", "vector")

    def __init__(self, resolution: Resolution, degree: int,
                 vector: Sequence[GroupRingElement], check: bool = True):
        self.resolution = resolution
        self.degree = degree
        self.vector = list(vector)
        if len(self.vector) != resolution.rank(degree):
            raise ResolutionError("invariant cycle has the wrong rank")
        if check:
            if not all(a.is_invariant() for a in self.vector):
                raise ResolutionError("vector is not G-invariant")
            if degree >= 1:
                img = resolution.apply_differential(degree, self.vector)
                if not all(a.is_zero() for a in img):
                    raise ResolutionError("vector is not a cycle")

    def __repr__(self) -> str:
        return (f"InvariantCycle(deg={self.degree}, "
                f"{[str(a) for a in self.vector]})")


def phi_inverse(res: Resolution, n: int, cycle: Sequence[int]
                ) -> InvariantCycle:
    """From a down-complex cycle to the invariant chain N.y representing it.

    The lift y takes each integer coordinate on the identity; multiplying by
    the norm spreads it over the group, and the result is an honest cycle
    because the lift's boundary lands in the augmentation ideal, which the
    norm kills.
    """
    if n < 1:
        raise ResolutionError("the correspondence is defined for degrees >= 1")
    if not is_cycle(res, n, cycle):
        raise ResolutionError("input is not a cycle of the down complex")
    w = res.group.order
    vec = [GroupRingElement(res.group, (int(c),) * w) for c in cycle]
    return InvariantCycle(res, n, vec)


def phi(x: InvariantCycle, via_solver: bool = False) -> tuple[int, ...]:
    """The homology class corresponding to an invariant cycle.

    Solves N.y = x and classifies y (x) 1.  On a free module every invariant
    is a norm and the coefficients of y can be read off directly (each
    coordinate of x has one repeated coefficient); the group-ring solver is
    kept as an independent slow path for cross-checking.
    """
    res = x.resolution
    n = x.degree
    if n < 1:
        raise ResolutionError("the correspondence is defined for degrees >= 1")
    if via_solver:
        G = res.group
        r = res.rank(n)
        norm_mat = ZGMatrix(G, r, r)
        for i in range(r):
            norm_mat.set(i, i, norm_element(G))
        y = solve_zg_linear(norm_mat, x.vector)
        if y is NoSolution:
            raise ResolutionError(
                "norm equation unsolvable; input is not an invariant of a free module")
        down = down_vector(y)
    else:
        down = [a.c[0] for a in x.vector]
    h = homology(res, n)
    return h.classify(down)


def is_stably_zero(x: InvariantCycle) -> bool:
    """True iff the stable map represented by x factors through a projective."""
    return not any(phi(x))


class ZeroGroup:
    """The trivial answer in the degree where the theory vanishes identically."""

    invariant_factors: list[int] = []
    generators: list[list[int]] = []
    is_trivial = True
    order = 1
    exponent = 1

    def __repr__(self) -> str:
        return "0"


ZERO = ZeroGroup()


def tate_group(res: Resolution, k: int):
    """The degree-k group of the Tate theory for k <= -1.

    k = -1 vanishes for every finite group; k <= -2 is homology in degree
    -k-1 via the norm correspondence.  Nonnegative k is out of scope.
    """
    if k >= 0:
        raise SchemaError(
            "only negative degrees are supported (degrees >= 0 are out of scope)")
    if k == -1:
        return ZERO
    return homology(res, -k - 1)


def random_cycle(res: Resolution, n: int, rng) -> list[int]:
    """A random integer cycle of the down complex in degree n (for property tests)."""
    h = homology(res, n)
    data = h._classify_data()
    kdim = len(data.zero_cols)
    if kdim == 0:
        return [0] * res.ranks[n]
    coeffs = [rng.randrange(-4, 5) for _ in range(kdim)]
    out = data.kmatrix.apply(coeffs)
    if not is_cycle(res, n, out):
        raise InternalCheckError("random kernel combination is not a cycle")
    return out
