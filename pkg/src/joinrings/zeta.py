"""Hasse-Weil zeta functions of finite-dimensional F_q-algebras.

A zeta function here is always a finite product prod_n (1 - t^n)^{e_n}
with t = q^{-s} and signed integer exponents, stored as a degree ->
exponent mapping.  The classical (1 - q^{-ns})^{-a} contributes e_n = -a;
positive exponents arise from the join prefactor.
"""

from __future__ import annotations

import json

from .errors import AlgebraError, UnsupportedCaseError
from .ffield import FieldCtx
from .groupring import wedderburn_abelian
from .groups import FiniteGroup, Subgroup
from .ntheory import prime_power


class ZetaFunction:
    """A formal product prod_n (1 - q^{-ns})^{e_n}, e_n a signed integer."""

    __slots__ = ("q", "factors")

    def __init__(self, q: int, factors: dict[int, int] | None = None):
        if prime_power(q) is None:
            raise AlgebraError(f"base {q} is not a prime power")
        self.q = q
        cleaned = {}
        for n, e in (factors or {}).items():
            n, e = int(n), int(e)
            if n < 1:
                raise AlgebraError(f"factor degree must be >= 1, got {n}")
            if e:
                cleaned[n] = e
        self.factors = dict(sorted(cleaned.items()))

    @classmethod
    def one(cls, q: int) -> "ZetaFunction":
        """The empty product."""
        return cls(q, {})

    def __mul__(self, other: "ZetaFunction") -> "ZetaFunction":
        if self.q != other.q:
            raise AlgebraError(f"base mismatch: {self.q} vs {other.q}")
        merged = dict(self.factors)
        for n, e in other.factors.items():
            merged[n] = merged.get(n, 0) + e
        return ZetaFunction(self.q, merged)

    def pole_order_at_zero(self) -> int:
        """Order of the pole at s = 0 (t = 1): each (1-t^n)^e contributes -e."""
        return -sum(self.factors.values())

    def degree(self) -> int:
        """sum n * (-e_n); for semisimple algebras this is the dimension."""
        return -sum(n * e for n, e in self.factors.items())

    def __eq__(self, other):
        return (
            isinstance(other, ZetaFunction)
            and self.q == other.q
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.q, tuple(self.factors.items())))

    def __repr__(self):
        return f"ZetaFunction(q={self.q}, {self.pretty()})"

    def pretty(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for n, e in self.factors.items():
            base = f"(1-{self.q}^-s)" if n == 1 else f"(1-{self.q}^-{n}s)"
            parts.append(f"{base}^{e}")
        return " ".join(parts)

    def to_json(self) -> str:
        return json.dumps({"q": self.q, "factors": {str(n): e for n, e in self.factors.items()}})

    @classmethod
    def from_json(cls, text: str) -> "ZetaFunction":
        data = json.loads(text)
        return cls(data["q"], {int(n): e for n, e in data["factors"].items()})


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def zeta_field(q: int) -> ZetaFunction:
    return ZetaFunction(q, {1: -1})


def zeta_matrix_ring(n: int, q: int) -> ZetaFunction:
    """zeta of M_n(F_q): equals zeta of F_q by Morita invariance."""
    if n < 1:
        raise AlgebraError(f"matrix size must be >= 1, got {n}")
    return ZetaFunction(q, {1: -1})


def zeta_abelian_group_ring(group: FiniteGroup, ctx: FieldCtx) -> ZetaFunction:
    """prod_{d | n} (1 - q^{-ord_d(q) s})^{-a_d} for abelian G coprime to q."""
    factors: dict[int, int] = {}
    for _, a_d, deg in wedderburn_abelian(group, ctx).triples:
        factors[deg] = factors.get(deg, 0) - a_d
    return ZetaFunction(ctx.q, factors)


def zeta_with_normal_sylow(group: FiniteGroup, H: Subgroup, ctx: FieldCtx) -> ZetaFunction:
    """Modular case via the radical: zeta of F_q[G] equals zeta of F_q[G/H].

    H must be a normal Sylow p-subgroup for p = char(F_q), and the quotient
    must be abelian of order coprime to p.
    """
    p = ctx.p
    if H.parent != group:
        raise AlgebraError("subgroup belongs to a different group")
    sylow = group.normal_sylow(p)
    if sylow is None or sylow.elements != H.elements:
        raise UnsupportedCaseError(f"{H} is not the normal {p}-Sylow subgroup")
    quotient, _ = group.quotient(H)
    if not quotient.is_abelian:
        raise UnsupportedCaseError("quotient by the Sylow subgroup is not abelian")
    return zeta_abelian_group_ring(quotient, ctx)


def zeta_group_ring(group: FiniteGroup, ctx: FieldCtx) -> ZetaFunction:
    """Dispatch: semisimple abelian case directly, else normal-Sylow reduction."""
    if group.order % ctx.p != 0:
        if not group.is_abelian:
            raise UnsupportedCaseError(
                f"{group.name}: non-abelian coprime case is not supported"
            )
        return zeta_abelian_group_ring(group, ctx)
    sylow = group.normal_sylow(ctx.p)
    if sylow is None:
        raise UnsupportedCaseError(
            f"{group.name} has no normal {ctx.p}-Sylow subgroup; zeta not supported"
        )
    return zeta_with_normal_sylow(group, sylow, ctx)


def zeta_semimagic(n: int, q: int) -> ZetaFunction:
    """zeta of the semimagic-square ring SM_n(F_q); char-sensitive at n = 2."""
    if n < 1:
        raise AlgebraError(f"semimagic size must be >= 1, got {n}")
    p, _ = prime_power(q)
    if n == 1:
        return ZetaFunction(q, {1: -1})
    if n == 2:
        return ZetaFunction(q, {1: -1 if p == 2 else -2})
    return ZetaFunction(q, {1: -2})


def zeta_join(shape) -> ZetaFunction:
    """(1 - q^{-s})^{r-1} times the product of the per-block zetas."""
    ctx = shape.ctx
    z = ZetaFunction(ctx.q, {1: shape.r - 1})
    for g in shape.groups:
        z = z * zeta_group_ring(g, ctx)
    return z


def pole_order_at_zero(z: ZetaFunction) -> int:
    return z.pole_order_at_zero()
