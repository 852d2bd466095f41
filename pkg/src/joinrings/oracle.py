"""Brute-force ground truth at desk scale.

Every closed-form claim elsewhere in the package can be replayed here by
exhaustive enumeration: unit counts, unit orders, Jacobson radicals via
quasi-regularity, and the u^n = 1 property.  Enumeration order is
lexicographic over coefficient vectors, so failing witnesses are
reproducible.
"""

from __future__ import annotations

from functools import reduce
from math import lcm

from . import linalg
from .errors import AlgebraError, EnumerationCapError, InternalConsistencyError
from .ffield import FieldCtx
from .groupring import GroupRingElem, circulant_rows, format_element
from .groups import FiniteGroup
from .joinring import JoinElem, JoinShape, join_embed
from .ntheory import factorize

DEFAULT_CAP = 2**20


# ---------------------------------------------------------------------------
# enumerable ring adapters
# ---------------------------------------------------------------------------

class EnumerableRing:
    """Uniform enumeration interface over the ring families we brute-force.

    Index 0 is zero; `one_index` marks the identity.  `element(i)` decodes
    the i-th coefficient vector (lexicographic, least significant first).
    """

    ctx: FieldCtx
    dim: int

    @property
    def size(self) -> int:
        return self.ctx.q**self.dim

    def check_cap(self, cap: int = DEFAULT_CAP) -> None:
        if self.size > cap:
            raise EnumerationCapError(
                f"{self!r} has {self.size} elements, beyond the cap {cap}"
            )

    def element(self, index: int):
        raise NotImplementedError

    def elements(self):
        return (self.element(i) for i in range(self.size))

    def _vector(self, index: int) -> list[int]:
        q = self.ctx.q
        out = []
        for _ in range(self.dim):
            out.append(index % q)
            index //= q
        return out

    # subclasses provide: one, mul(a, b), is_unit(a), label(a)


class GroupRingEnum(EnumerableRing):
    """F_q[G] with elements enumerated by coefficient vector."""

    def __init__(self, group: FiniteGroup, ctx: FieldCtx):
        self.group = group
        self.ctx = ctx
        self.dim = group.order
        self.one = GroupRingElem.one(ctx, group)

    def element(self, index: int) -> GroupRingElem:
        return GroupRingElem(self.ctx, self.group, self._vector(index))

    def mul(self, a, b):
        return a * b

    def is_unit(self, a) -> bool:
        return linalg.is_invertible(circulant_rows(a), self.ctx)

    def label(self, a) -> str:
        return format_element(a)

    def __repr__(self):
        return f"F{self.ctx.q}[{self.group.name}]"


class JoinRingEnum(EnumerableRing):
    """A join ring enumerated blockwise, then off-diagonal scalars."""

    def __init__(self, shape: JoinShape):
        self.shape = shape
        self.ctx = shape.ctx
        self.dim = shape.dimension()
        self.one = shape.one()

    def element(self, index: int) -> JoinElem:
        vec = self._vector(index)
        pos = 0
        blocks = []
        for g in self.shape.groups:
            blocks.append(GroupRingElem(self.ctx, g, vec[pos : pos + g.order]))
            pos += g.order
        d = self.shape.d
        offdiag = [[0] * d for _ in range(d)]
        for i in range(d):
            for j in range(d):
                if i != j:
                    offdiag[i][j] = vec[pos]
                    pos += 1
        return JoinElem(self.shape, blocks, offdiag)

    def mul(self, a, b):
        return a * b

    def is_unit(self, a) -> bool:
        return linalg.is_invertible(join_embed(a), self.ctx)

    def label(self, a) -> str:
        return a.to_json()

    def __repr__(self):
        return repr(self.shape)


class SemimagicRing(EnumerableRing):
    """n x n matrices with all row and column sums equal.

    The basis is computed as the nullspace of the row/column sum
    constraints, so the dimension claim n^2 - 2n + 2 is verified rather
    than assumed.
    """

    def __init__(self, n: int, ctx: FieldCtx):
        if n < 1:
            raise AlgebraError(f"semimagic size must be >= 1, got {n}")
        self.n = n
        self.ctx = ctx
        self.basis = self._build_basis()
        self.dim = len(self.basis)
        expected = 1 if n == 1 else n * n - 2 * n + 2
        if self.dim != expected:
            raise InternalConsistencyError(
                f"semimagic dimension {self.dim} != expected {expected}"
            )
        self.one = self.element_from_matrix(linalg.identity(n))

    def _build_basis(self) -> list[list[list[int]]]:
        n, ctx = self.n, self.ctx
        if n == 1:
            return [[[1]]]
        # constraints: rowsum_i - rowsum_0 = 0 (i >= 1), colsum_j - rowsum_0 = 0
        rows = []
        for i in range(1, n):
            vec = [0] * (n * n)
            for j in range(n):
                vec[i * n + j] = 1
                vec[j] = ctx.sub(vec[j], 1)
            rows.append(vec)
        for j in range(n):
            vec = [0] * (n * n)
            for i in range(n):
                vec[i * n + j] = ctx.add(vec[i * n + j], 1)
            for c in range(n):
                vec[c] = ctx.sub(vec[c], 1)
            rows.append(vec)
        basis_vecs = linalg.nullspace(rows, ctx)
        return [[vec[i * n : (i + 1) * n] for i in range(n)] for vec in basis_vecs]

    def element(self, index: int):
        vec = self._vector(index)
        ctx, n = self.ctx, self.n
        out = [[0] * n for _ in range(n)]
        for coef, mat in zip(vec, self.basis):
            if coef:
                for i in range(n):
                    for j in range(n):
                        out[i][j] = ctx.add(out[i][j], ctx.mul(coef, mat[i][j]))
        return tuple(tuple(r) for r in out)

    def element_from_matrix(self, rows):
        mat = tuple(tuple(r) for r in rows)
        sums = [reduce(self.ctx.add, row, 0) for row in mat]
        colsums = [reduce(self.ctx.add, col, 0) for col in zip(*mat)]
        if len(set(sums + colsums)) != 1:
            raise AlgebraError("matrix is not semimagic")
        return mat

    def sigma(self, a) -> int:
        """The common row/column sum."""
        return reduce(self.ctx.add, a[0], 0)

    def mul(self, a, b):
        return tuple(tuple(r) for r in linalg.mat_mul([list(r) for r in a], [list(r) for r in b], self.ctx))

    def is_unit(self, a) -> bool:
        return linalg.is_invertible([list(r) for r in a], self.ctx)

    def label(self, a) -> str:
        return repr([list(r) for r in a])

    def __repr__(self):
        return f"SM{self.n}(F{self.ctx.q})"


def semimagic_ring(n: int, ctx: FieldCtx) -> SemimagicRing:
    return SemimagicRing(n, ctx)


# ---------------------------------------------------------------------------
# enumeration oracles
# ---------------------------------------------------------------------------

def enumerate_units(ring: EnumerableRing, cap: int = DEFAULT_CAP, stream: bool = False):
    """Exact unit count (or the units themselves with stream=True)."""
    ring.check_cap(cap)
    if stream:
        return [a for a in ring.elements() if ring.is_unit(a)]
    if isinstance(ring, GroupRingEnum) and ring.ctx.q == 2:
        return _count_units_gf2_groupring(ring)
    if isinstance(ring, JoinRingEnum) and ring.ctx.q == 2:
        return _count_units_gf2_join(ring)
    return sum(1 for a in ring.elements() if ring.is_unit(a))


def _count_units_gf2_groupring(ring: GroupRingEnum) -> int:
    """Packed-row fast path: one bitset elimination per element."""
    g = ring.group
    n = g.order
    inv_rows = [g.table[g.inverse[i]] for i in range(n)]
    count = 0
    for code in range(2**n):
        rows = [
            sum(((code >> row[j]) & 1) << j for j in range(n))
            for row in inv_rows
        ]
        if linalg._rank_gf2(rows, n) == n:
            count += 1
    return count


def _count_units_gf2_join(ring: JoinRingEnum) -> int:
    count = 0
    for a in ring.elements():
        rows = [sum(bit << j for j, bit in enumerate(r)) for r in join_embed(a)]
        if linalg._rank_gf2(rows, ring.shape.n) == ring.shape.n:
            count += 1
    return count


def unit_orders(ring: EnumerableRing, cap: int = DEFAULT_CAP):
    """List of (unit, multiplicative order) over all units."""
    units = enumerate_units(ring, cap, stream=True)
    n_units = len(units)

    def power(u, t):
        result, base = ring.one, u
        while t:
            if t & 1:
                result = ring.mul(result, base)
            base = ring.mul(base, base)
            t >>= 1
        return result

    primes = list(factorize(n_units)) if n_units > 1 else []
    out = []
    for u in units:
        t = n_units
        for p in primes:
            while t % p == 0 and power(u, t // p) == ring.one:
                t //= p
        out.append((u, t))
    return out


def unit_group_exponent(ring: EnumerableRing, cap: int = DEFAULT_CAP) -> int:
    """lcm of the orders of all units."""
    return reduce(lcm, (t for _, t in unit_orders(ring, cap)), 1)


def exp_U1(group: FiniteGroup, ctx: FieldCtx, cap: int = DEFAULT_CAP) -> int:
    """Exponent of the normalized unit group 1 + Delta(F_q[G]), G a p-group.

    Over F_p with G a p-group the group ring is local, so the normalized
    units are exactly the elements of coefficient sum 1, and every order is
    a power of p.
    """
    p = ctx.p
    if not group.is_p_group(p):
        raise AlgebraError(f"{group.name} is not a {p}-group")
    ring = GroupRingEnum(group, ctx)
    ring.check_cap(cap)
    one = ring.one
    exponent = 1
    for a in ring.elements():
        if a.aug_total() != 1:
            continue
        order = 1
        x = a
        while x != one:
            x = x**p
            order *= p
            if order > ring.size:  # pragma: no cover - safety net
                raise InternalConsistencyError("normalized unit order did not stabilize")
        exponent = lcm(exponent, order)
    return exponent


def units_of_order(ring: EnumerableRing, m: int, cap: int = DEFAULT_CAP) -> int:
    """Count units of multiplicative order exactly m."""
    if m < 1:
        raise AlgebraError(f"order must be positive, got {m}")
    return sum(1 for _, t in unit_orders(ring, cap) if t == m)


def is_delta_n(ring: EnumerableRing, n: int, cap: int = DEFAULT_CAP):
    """True iff u^n = 1 for every unit; else (False, witness, order)."""
    if n < 1:
        raise AlgebraError(f"exponent must be positive, got {n}")
    for u, t in unit_orders(ring, cap):
        if n % t != 0:
            return False, u, t
    return True, None, None


# ---------------------------------------------------------------------------
# Jacobson radical by quasi-regularity
# ---------------------------------------------------------------------------

def jacobson_radical(ring: EnumerableRing, cap: int = DEFAULT_CAP) -> list:
    """{x : 1 - r x is a unit for all r}, verified two-sided and nilpotent."""
    ring.check_cap(cap)
    elements = list(ring.elements())
    one = ring.one
    rad = []
    for x in elements:
        ok = True
        for r in elements:
            candidate = _one_minus(ring, one, ring.mul(r, x))
            if not ring.is_unit(candidate):
                ok = False
                break
        if ok:
            rad.append(x)

    rad_set = set(rad)
    # two-sided ideal check
    for x in rad:
        for r in elements:
            if ring.mul(r, x) not in rad_set or ring.mul(x, r) not in rad_set:
                raise InternalConsistencyError("radical is not a two-sided ideal")
    # nilpotency: rad^k shrinks to {0} within dim steps
    current = set(rad)
    zero = ring.element(0)
    for _ in range(ring.dim):
        if current == {zero}:
            break
        current = {ring.mul(x, y) for x in current for y in rad}
    else:
        if current != {zero}:
            raise InternalConsistencyError("radical failed the nilpotency check")
    return rad


def _one_minus(ring: EnumerableRing, one, a):
    if isinstance(a, GroupRingElem):
        return one - a
    if isinstance(a, JoinElem):
        return one - a
    # semimagic tuples
    ctx = ring.ctx
    return tuple(
        tuple(ctx.sub(o, x) for o, x in zip(orow, arow)) for orow, arow in zip(one, a)
    )


def semisimple_unit_factorization(ring: EnumerableRing, cap: int = DEFAULT_CAP):
    """Check |R^x| = |Rad(R)| * |image of R^x in R/Rad(R)|.

    Returns (unit_count, radical_size, image_size).  The image is counted
    by mapping each unit to a canonical coset representative of 1 + Rad
    cosets, which is an independent count of the semisimplification's
    units.
    """
    rad = jacobson_radical(ring, cap)
    units = enumerate_units(ring, cap, stream=True)
    rad_list = list(rad)

    def coset_key(u):
        # canonical representative: the lexicographically smallest element
        # of the coset u * (1 + Rad) = u + u*Rad
        members = [_coset_member(ring, u, ring.mul(u, x)) for x in rad_list]
        return min(_key(ring, m) for m in members)

    image = {coset_key(u) for u in units}
    return len(units), len(rad_list), len(image)


def _coset_member(ring, u, ux):
    if isinstance(u, (GroupRingElem, JoinElem)):
        return u + ux
    ctx = ring.ctx
    return tuple(
        tuple(ctx.add(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(u, ux)
    )


def _key(ring, a):
    if isinstance(a, GroupRingElem):
        return a.coeffs
    if isinstance(a, JoinElem):
        return (tuple(b.coeffs for b in a.blocks), a.offdiag)
    return a
