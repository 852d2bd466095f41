"""Finite groups by abelian invariants or explicit Cayley tables.

Elements are indices 0..n-1 with the identity fixed at index 0 (the first
row/column encoding of circulant matrices depends on this convention).
Groups are validated at construction and immutable afterwards.
"""

from __future__ import annotations

import itertools
from functools import reduce
from math import gcd, lcm

from .errors import AlgebraError, NotNormalError, NotSubgroupError, ParseError
from .ntheory import factorize, is_prime

ORDER_CAP = 256


class FiniteGroup:
    """A finite group given by its full multiplication table.

    Prefer the constructors :func:`cyclic`, :func:`abelian`,
    :func:`from_table`, :func:`symmetric`, :func:`quaternion`.
    """

    def __init__(self, table, invariants=None, name=None, _validated=False):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.invariants = tuple(invariants) if invariants else None
        self.name = name or (
            "x".join(f"C{m}" for m in self.invariants) if self.invariants else f"G{self.order}"
        )
        if self.order > ORDER_CAP:
            raise AlgebraError(f"group order {self.order} exceeds cap {ORDER_CAP}")
        if not _validated:
            self._validate()
        self.inverse = tuple(self._find_inverse(a) for a in range(self.order))
        self.element_orders = tuple(self._element_order(a) for a in range(self.order))

    # -- construction-time checks -------------------------------------------

    def _validate(self) -> None:
        n = self.order
        for i, row in enumerate(self.table):
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise AlgebraError(f"row {i} of Cayley table is malformed")
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise AlgebraError(f"index 0 is not an identity: fails at element {a}")
        for a in range(n):
            if all(self.table[a][b] != 0 for b in range(n)):
                raise AlgebraError(f"element {a} has no inverse")
        if n <= 64:
            for a in range(n):
                for b in range(n):
                    ab = self.table[a][b]
                    for c in range(n):
                        if self.table[ab][c] != self.table[a][self.table[b][c]]:
                            raise AlgebraError(
                                f"associativity fails at witness triple ({a}, {b}, {c})"
                            )

    def _find_inverse(self, a: int) -> int:
        for b in range(self.order):
            if self.table[a][b] == 0:
                return b
        raise AlgebraError(f"element {a} has no inverse")  # pragma: no cover

    def _element_order(self, a: int) -> int:
        t, x = 1, a
        while x != 0:
            x = self.table[x][a]
            t += 1
        return t

    # -- basic operations -----------------------------------------------------

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    @property
    def is_abelian(self) -> bool:
        if self.invariants is not None:
            return True
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(self.order))

    def exponent(self) -> int:
        """lcm of the element orders; divides |G|."""
        return reduce(lcm, self.element_orders, 1)

    def order_counts(self) -> dict[int, int]:
        """Mapping d -> number of elements of order d."""
        counts: dict[int, int] = {}
        for t in self.element_orders:
            counts[t] = counts.get(t, 0) + 1
        return counts

    def is_p_group(self, p: int) -> bool:
        if not is_prime(p):
            raise AlgebraError(f"{p} is not prime")
        n = self.order
        while n % p == 0:
            n //= p
        return n == 1

    # -- subgroups and quotients ----------------------------------------------

    def subgroup(self, elements) -> "Subgroup":
        return Subgroup(self, elements)

    def subgroup_generated(self, generators) -> "Subgroup":
        """Close a generating set under products (finite, so this suffices)."""
        elems = {0}
        frontier = set(generators) | {0}
        while frontier:
            new = set()
            for a in frontier:
                for b in list(elems) + list(generators):
                    for c in (self.table[a][b], self.table[b][a]):
                        if c not in elems and c not in frontier:
                            new.add(c)
            elems |= frontier
            frontier = new
        return Subgroup(self, sorted(elems))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (0,))

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, range(self.order))

    def normal_sylow(self, p: int) -> "Subgroup | None":
        """The normal Sylow p-subgroup if one exists, else None.

        A Sylow p-subgroup is normal iff it is unique iff the set of
        p-power-order elements has exactly the p-part of |G| elements and
        is closed under the group operation.
        """
        pm = 1
        n = self.order
        while n % p == 0:
            pm *= p
            n //= p
        candidates = [a for a in range(self.order) if _is_p_power(self.element_orders[a], p)]
        if len(candidates) != pm:
            return None
        cand = set(candidates)
        if any(self.table[a][b] not in cand for a in candidates for b in candidates):
            return None
        return Subgroup(self, sorted(candidates))

    def quotient(self, H: "Subgroup") -> tuple["FiniteGroup", tuple[int, ...]]:
        """Quotient group G/H with the projection element -> coset index.

        Cosets are ordered by their least member, so the identity coset is
        index 0.
        """
        if H.parent is not self:
            raise NotSubgroupError("subgroup belongs to a different group")
        if not H.is_normal:
            raise NotNormalError("cannot form quotient by a non-normal subgroup")
        seen: dict[int, int] = {}
        cosets: list[tuple[int, ...]] = []
        for g in range(self.order):
            if g in seen:
                continue
            coset = sorted(self.table[g][h] for h in H.elements)
            idx = len(cosets)
            cosets.append(tuple(coset))
            for x in coset:
                seen[x] = idx
        proj = tuple(seen[g] for g in range(self.order))
        k = len(cosets)
        table = [
            [proj[self.table[cosets[i][0]][cosets[j][0]]] for j in range(k)]
            for i in range(k)
        ]
        name = f"{self.name}/{H}"
        return FiniteGroup(table, name=name), proj

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"<{self.name}: order {self.order}>"


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


class Subgroup:
    """A validated subgroup, stored as a sorted element-index tuple."""

    def __init__(self, parent: FiniteGroup, elements):
        self.parent = parent
        self.elements = tuple(sorted(set(elements)))
        self.order = len(self.elements)
        eset = set(self.elements)
        if 0 not in eset:
            raise NotSubgroupError("subgroup must contain the identity")
        for a in self.elements:
            if parent.inverse[a] not in eset:
                raise NotSubgroupError(f"subgroup not closed under inverse at {a}")
            for b in self.elements:
                if parent.table[a][b] not in eset:
                    raise NotSubgroupError(f"subgroup not closed under product at ({a}, {b})")
        self._eset = eset
        self.is_normal = self._check_normal()

    def _check_normal(self) -> bool:
        t, inv = self.parent.table, self.parent.inverse
        return all(
            t[t[g][h]][inv[g]] in self._eset
            for g in range(self.parent.order)
            for h in self.elements
        )

    def __contains__(self, a: int) -> bool:
        return a in self._eset

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent == other.parent
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def __repr__(self):
        return f"H{list(self.elements)}"


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def trivial() -> FiniteGroup:
    return FiniteGroup(((0,),), invariants=(1,), name="trivial", _validated=True)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise AlgebraError(f"cyclic group order must be >= 1, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, invariants=(n,), name=f"C{n}", _validated=True)


def abelian(invariants) -> FiniteGroup:
    """Direct product of cyclic groups Z/n1 x ... x Z/nk.

    Elements are mixed-radix tuples; (0,...,0) is index 0.
    """
    invariants = tuple(int(m) for m in invariants)
    if not invariants or any(m < 1 for m in invariants):
        raise AlgebraError(f"invariants must be positive integers, got {invariants}")
    invariants = tuple(m for m in invariants if m > 1) or (1,)
    n = 1
    for m in invariants:
        n *= m
    if n > ORDER_CAP:
        raise AlgebraError(f"group order {n} exceeds cap {ORDER_CAP}")

    def decode(i: int) -> tuple[int, ...]:
        out = []
        for m in invariants:
            out.append(i % m)
            i //= m
        return tuple(out)

    def encode(t) -> int:
        i = 0
        for m, x in zip(reversed(invariants), reversed(t)):
            i = i * m + x
        return i

    table = [
        [encode(tuple((a + b) % m for a, b, m in zip(decode(i), decode(j), invariants)))
         for j in range(n)]
        for i in range(n)
    ]
    return FiniteGroup(table, invariants=invariants, _validated=True)


def from_table(table) -> FiniteGroup:
    """Build and fully validate a group from an explicit Cayley table."""
    return FiniteGroup(table)


def symmetric(n: int) -> FiniteGroup:
    """The symmetric group S_n (n <= 5 keeps the order under the cap)."""
    perms = list(itertools.permutations(range(n)))  # identity comes first
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(a[b[i]] for i in range(n))] for b in perms]
        for a in perms
    ]
    return FiniteGroup(table, name=f"S{n}")


def quaternion() -> FiniteGroup:
    """The quaternion group Q_8 = {1, -1, i, -i, j, -j, k, -k}."""
    # element = (sign in {0,1}, basis in {1, i, j, k})
    basis_mul = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }
    elems = [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2), (0, 3), (1, 3)]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, b1 in elems:
        row = []
        for s2, b2 in elems:
            s3, b3 = basis_mul[(b1, b2)]
            row.append(index[((s1 + s2 + s3) % 2, b3)])
        table.append(row)
    return FiniteGroup(table, name="Q8")


def parse_group_spec(spec: str) -> FiniteGroup:
    """Parse the group mini-grammar.

    "C3", "C2xC2xC4" (abelian invariants), "trivial", "S3", "Q8", or
    "table:<path>" for a whitespace-separated Cayley-table file of
    0-based indices.
    """
    spec = spec.strip()
    if spec == "trivial":
        return trivial()
    if spec == "Q8":
        return quaternion()
    if spec.startswith("S") and spec[1:].isdigit():
        return symmetric(int(spec[1:]))
    if spec.startswith("table:"):
        path = spec[len("table:"):]
        with open(path) as fh:
            rows = [[int(x) for x in line.split()] for line in fh if line.strip()]
        return from_table(rows)
    parts = spec.split("x")
    invariants = []
    for part in parts:
        if not part.startswith("C") or not part[1:].isdigit():
            raise ParseError(f"bad group spec {spec!r}")
        invariants.append(int(part[1:]))
    return abelian(invariants)


def abelian_groups_of_order(n: int) -> list[FiniteGroup]:
    """All abelian groups of order n, one per isomorphism class."""
    if n == 1:
        return [trivial()]
    per_prime: list[list[tuple[int, ...]]] = []
    for p, e in factorize(n).items():
        per_prime.append([tuple(p**part for part in parts) for parts in _partitions(e)])
    out = []
    for combo in itertools.product(*per_prime):
        invariants = tuple(itertools.chain.from_iterable(combo))
        out.append(abelian(invariants))
    return out


def _partitions(n: int, cap: int | None = None):
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap or n), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest
