"""Finite groups as validated multiplication tables, and their integral group rings.

Elements of a group of order w are the indices 0..w-1, with 0 always the
identity.  The enumeration order is fixed at construction and travels with the
group when it is serialized, so element indices are stable across runs.

A group ring element is a dense integer coefficient vector of length w:
coefficient c[g] on the basis element g.  All arithmetic is exact.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Sequence

from .errors import GroupError, SchemaError

# Exhaustive associativity checking is cubic; beyond this order we trust the
# constructors (closures and named families are associative by construction).
VALIDATE_ORDER_BOUND = 64

# Closure of permutation generators refuses to enumerate past this order.
MAX_CLOSURE_ORDER = 20000


class FiniteGroup:
    """A finite group given by its full multiplication table.

    table[a][b] is the index of the product a*b.  Index 0 is the identity.
    """

    __slots__ = ("label", "order", "table", "inverse", "_hash")

    def __init__(self, table: Sequence[Sequence[int]], label: str = "G",
                 validate: bool | None = None):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.label = label
        if validate is None:
            validate = self.order <= VALIDATE_ORDER_BOUND
        self._check_table(full=validate)
        inv = [None] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.table[a][b] == 0:
                    inv[a] = b
                    break
            if inv[a] is None or self.table[inv[a]][a] != 0:
                raise GroupError(f"element {a} of {label!r} has no two-sided inverse")
        self.inverse = tuple(inv)
        self._hash = hash((self.label, self.table))

    def _check_table(self, full: bool) -> None:
        w = self.order
        if w == 0:
            raise GroupError("empty multiplication table")
        for a, row in enumerate(self.table):
            if len(row) != w:
                raise GroupError(f"row {a} has length {len(row)}, expected {w}")
            if sorted(row) != list(range(w)):
                raise GroupError(f"row {a} is not a permutation of 0..{w - 1}")
        cols = list(zip(*self.table))
        for b, col in enumerate(cols):
            if sorted(col) != list(range(w)):
                raise GroupError(f"column {b} is not a permutation of 0..{w - 1}")
        for a in range(w):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise GroupError("index 0 is not a two-sided identity")
        if full:
            t = self.table
            for a in range(w):
                ta = t[a]
                for b in range(w):
                    tab = ta[b]
                    tb = t[b]
                    for c in range(w):
                        if t[tab][c] != ta[tb[c]]:
                            raise GroupError(
                                f"associativity fails at ({a},{b},{c})")

    # -- basic structure ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteGroup)
                and self.table == other.table and self.label == other.label)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"label": self.label, "order": self.order,
                "table": [list(row) for row in self.table]}

    @classmethod
    def from_json(cls, obj: dict) -> "FiniteGroup":
        if not isinstance(obj, dict):
            raise SchemaError("group JSON must be an object")
        if "table" in obj:
            table = obj["table"]
            label = obj.get("label", "G")
            if "order" in obj and obj["order"] != len(table):
                raise SchemaError("declared order does not match table size")
            try:
                return cls(table, label=label)
            except GroupError as e:
                raise SchemaError(f"invalid group table: {e}") from e
        if "generators" in obj:
            degree = obj.get("degree")
            if degree is None:
                raise SchemaError("permutation group JSON needs a 'degree'")
            return from_permutations(degree, obj["generators"],
                                     label=obj.get("label", "perm"))
        raise SchemaError("group JSON needs either 'table' or 'generators'")


# -- named families ---------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n; element i is t^i."""
    if n < 1:
        raise GroupError("cyclic group order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, label=f"C{n}")


def trivial() -> FiniteGroup:
    return cyclic(1)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n.  Element i + n*j is r^i s^j (s^2 = 1, srs = r^-1)."""
    if n < 1:
        raise GroupError("dihedral parameter must be >= 1")
    w = 2 * n

    def idx(i: int, j: int) -> int:
        return i % n + n * (j % 2)

    table = [[0] * w for _ in range(w)]
    for a in range(n):
        for b in range(2):
            for c in range(n):
                for d in range(2):
                    # (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b+d}
                    i = a + (c if b == 0 else -c)
                    table[idx(a, b)][idx(c, d)] = idx(i, b + d)
    return FiniteGroup(table, label=f"D{n}")


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n letters, n <= 5, in lexicographic tuple order."""
    if not 1 <= n <= 5:
        raise GroupError("symmetric(n) supports 1 <= n <= 5")
    perms = sorted(itertools.permutations(range(n)))
    assert perms[0] == tuple(range(n))  # identity is lexicographically first
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms]
             for p in perms]
    return FiniteGroup(table, label=f"S{n}")


def quaternion8() -> FiniteGroup:
    """Quaternion group {±1, ±i, ±j, ±k}.  Index order: 1,-1,i,-i,j,-j,k,-k."""
    # axis products: (axis, axis) -> (sign, axis) with axes 0=1, 1=i, 2=j, 3=k
    ax = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
          (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
          (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
          (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0)}

    def idx(sign: int, axis: int) -> int:
        return 2 * axis + (0 if sign == 1 else 1)

    elems = [(s, a) for a in range(4) for s in (1, -1)]
    table = [[0] * 8 for _ in range(8)]
    for p, (s1, a1) in enumerate(elems):
        for q, (s2, a2) in enumerate(elems):
            s, a = ax[(a1, a2)]
            table[p][q] = idx(s1 * s2 * s, a)
    return FiniteGroup(table, label="Q8")


def from_permutations(degree: int, generators: Iterable[Sequence[int]],
                      label: str = "perm",
                      max_order: int = MAX_CLOSURE_ORDER) -> FiniteGroup:
    """Close a set of permutations (0-based image lists) under composition.

    Elements are enumerated in breadth-first order from the identity, so the
    result is deterministic in the generator order.  Composition convention:
    (p*q)(i) = p(q(i)).
    """
    gens = []
    for g in generators:
        g = tuple(g)
        if sorted(g) != list(range(degree)):
            raise GroupError(f"{list(g)} is not a permutation of 0..{degree - 1}")
        gens.append(g)
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    queue = [ident]
    while queue:
        p = queue.pop(0)
        for g in gens:
            q = tuple(p[g[i]] for i in range(degree))
            if q not in index:
                if len(elems) >= max_order:
                    raise GroupError(
                        f"closure exceeds the maximum order {max_order}")
                index[q] = len(elems)
                elems.append(q)
                queue.append(q)
    table = [[index[tuple(p[q[i]] for i in range(degree))] for q in elems]
             for p in elems]
    return FiniteGroup(table, label=label, validate=False)


_NAMED = {"q8": quaternion8, "quaternion8": quaternion8, "trivial": trivial}


def build_group(spec) -> FiniteGroup:
    """Build a group from a short string spec, a parsed JSON object, or pass one through.

    String forms: "trivial", "q8", "cyclic:N", "dihedral:N" (order 2N),
    "sym:N" (N <= 5), or "file:PATH" pointing at a group JSON file.
    """
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, dict):
        return FiniteGroup.from_json(spec)
    if not isinstance(spec, str):
        raise SchemaError(f"cannot build a group from {type(spec).__name__}")
    name, _, arg = spec.partition(":")
    name = name.strip().lower()
    if name in _NAMED and not arg:
        return _NAMED[name]()
    if name == "file":
        with open(arg) as fh:
            return FiniteGroup.from_json(json.load(fh))
    if not arg:
        raise SchemaError(f"unknown group spec {spec!r}")
    try:
        n = int(arg)
    except ValueError:
        raise SchemaError(f"bad numeric parameter in group spec {spec!r}")
    if name in ("cyclic", "c"):
        return cyclic(n)
    if name in ("dihedral", "d"):
        return dihedral(n)
    if name in ("sym", "s", "symmetric"):
        return symmetric(n)
    raise SchemaError(f"unknown group spec {spec!r}")


# -- group ring --------------------------------------------------------------

class GroupRingElement:
    """An element of Z[G], stored as a dense coefficient tuple over the elements of G."""

    __slots__ = ("group", "c")

    def __init__(self, group: FiniteGroup, coeffs: Sequence[int]):
        if len(coeffs) != group.order:
            raise ValueError("coefficient vector has wrong length")
        self.group = group
        self.c = tuple(coeffs)

    # constructors

    @classmethod
    def zero(cls, group: FiniteGroup) -> "GroupRingElement":
        return cls(group, (0,) * group.order)

    @classmethod
    def one(cls, group: FiniteGroup) -> "GroupRingElement":
        return cls.basis(group, 0)

    @classmethod
    def basis(cls, group: FiniteGroup, g: int, coeff: int = 1) -> "GroupRingElement":
        c = [0] * group.order
        c[g] = coeff
        return cls(group, c)

    # ring structure

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(self.group,
                                [a + b for a, b in zip(self.c, other.c)])

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(self.group,
                                [a - b for a, b in zip(self.c, other.c)])

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.group, [-a for a in self.c])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return ring_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, k: int) -> "GroupRingElement":
        return GroupRingElement(self.group, [k * a for a in self.c])

    def left_translate(self, g: int) -> "GroupRingElement":
        """g * self: permutes coefficients by left multiplication."""
        row = self.group.table[g]
        out = [0] * self.group.order
        for h, v in enumerate(self.c):
            if v:
                out[row[h]] = v
        return GroupRingElement(self.group, out)

    def augmentation(self) -> int:
        return sum(self.c)

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_invariant(self) -> bool:
        """True when g * self == self for all g, i.e. self is an integer multiple of the norm."""
        first = self.c[0]
        return all(v == first for v in self.c)

    def support(self):
        return [(g, v) for g, v in enumerate(self.c) if v]

    def __eq__(self, other) -> bool:
        # group compared by value, not identity: reloaded groups must match
        return (isinstance(other, GroupRingElement)
                and (self.group is other.group or self.group == other.group)
                and self.c == other.c)

    def __hash__(self) -> int:
        return hash(self.c)

    def __repr__(self) -> str:
        terms = []
        for g, v in enumerate(self.c):
            if not v:
                continue
            name = "e" if g == 0 else f"g{g}"
            if v == 1:
                terms.append(name)
            elif v == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{v}*{name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def ring_multiply(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Convolution product: (ab)_h = sum over g*g' = h of a_g b_{g'}."""
    if a.group is not b.group and a.group != b.group:
        raise ValueError("operands live in different group rings")
    table = a.group.table
    out = [0] * a.group.order
    for g, ag in enumerate(a.c):
        if ag:
            row = table[g]
            for h, bh in enumerate(b.c):
                if bh:
                    out[row[h]] += ag * bh
    return GroupRingElement(a.group, out)


def norm_element(group: FiniteGroup) -> GroupRingElement:
    """The norm N = sum of all group elements.  N*g = g*N = N and N*N = |G|*N."""
    return GroupRingElement(group, (1,) * group.order)


def augmentation(a: GroupRingElement) -> int:
    """The ring homomorphism Z[G] -> Z sending every group element to 1."""
    return a.augmentation()
