"""Exact arithmetic in finite fields F_{p^k}.

Elements are canonically encoded as integers in [0, q): the element with
polynomial representative c_0 + c_1 x + ... + c_{k-1} x^{k-1} is encoded as
sum(c_i * p**i).  A :class:`FieldCtx` owns the modulus and (for small q)
precomputed addition / multiplication tables so that inner loops elsewhere
in the package can work on raw integer codes.

The public element type :class:`FieldElement` wraps a code together with
its context and supports the usual operators.  Elements from different
contexts never mix; cross-context arithmetic raises
:class:`~joinrings.errors.ContextMismatchError`.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .errors import AlgebraError, ContextMismatchError, NotInvertibleError, ParseError
from .ntheory import factorize, is_prime, prime_power

# Contexts with q at most this bound get full q x q lookup tables.
_TABLE_LIMIT = 1024

Poly = tuple[int, ...]  # dense coefficients, constant term first


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_p (dense tuples, constant term first)
# ---------------------------------------------------------------------------

def _poly_trim(c: list[int]) -> Poly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Poly, m: Poly, p: int) -> Poly:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        factor = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * mi) % p
        a.pop()
    return _poly_trim(a)


def _poly_divmod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 1)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        factor = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        q[shift] = factor
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bi) % p
        a.pop()
    return _poly_trim(q), _poly_trim(list(a))


def _poly_ext_gcd_inverse(a: Poly, m: Poly, p: int) -> Poly:
    """Inverse of a modulo m over F_p via extended Euclid."""
    # invariant: r0 = s0*a (mod m), r1 = s1*a (mod m)
    r0, r1 = m, _poly_trim(list(a))
    s0, s1 = (), (1,)
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_trim([x % p for x in _poly_sub(s0, _poly_mul(q, s1, p), p)])
    if len(r0) != 1:
        raise NotInvertibleError("element is not invertible modulo the field modulus")
    c = pow(r0[0], p - 2, p)
    return _poly_trim([(x * c) % p for x in s0])


def _poly_sub(a: Poly, b: Poly, p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return out


def _is_irreducible(m: Poly, p: int) -> bool:
    """Trial-division irreducibility: no roots, no monic factor of degree <= deg/2."""
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    # root check (covers all degree-1 factors)
    for a in range(p):
        if sum(c * pow(a, i, p) for i, c in enumerate(m)) % p == 0:
            return False
    # monic factors of degree 2 .. k//2
    for d in range(2, k // 2 + 1):
        for code in range(p**d):
            cand = _decode_poly(code, p, d) + (1,)
            if not _poly_mod(m, cand, p):
                return False
    return True


def _decode_poly(code: int, p: int, length: int) -> Poly:
    out = []
    for _ in range(length):
        out.append(code % p)
        code //= p
    return tuple(out)


def _encode_poly(coeffs: Poly, p: int) -> int:
    code = 0
    for c in reversed(coeffs):
        code = code * p + c
    return code


def _canonical_modulus(p: int, k: int) -> Poly:
    """Lexicographically smallest irreducible monic degree-k polynomial.

    Candidates x^k + (lower part) are scanned in increasing order of the
    base-p code of the lower part, so the choice is reproducible.
    """
    if k == 1:
        return (0, 1)  # the polynomial x
    for code in range(p**k):
        cand = _decode_poly(code, p, k) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AlgebraError(f"no irreducible polynomial of degree {k} over F_{p}")  # pragma: no cover


# ---------------------------------------------------------------------------
# field context
# ---------------------------------------------------------------------------

class FieldCtx:
    """The field F_{p^k} with a fixed monic irreducible modulus.

    Immutable after construction; safe to share.  Raw operations
    (:meth:`add`, :meth:`mul`, ...) act on integer codes in [0, q).
    """

    def __init__(self, p: int, k: int = 1, modulus: Poly | None = None):
        if not is_prime(p):
            raise AlgebraError(f"{p} is not prime")
        if k < 1:
            raise AlgebraError(f"extension degree must be positive, got {k}")
        self.p = p
        self.k = k
        self.q = p**k
        if modulus is None:
            modulus = _canonical_modulus(p, k)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise AlgebraError(
                    f"modulus must be monic of degree {k} over F_{p}, got {modulus}"
                )
            if not _is_irreducible(modulus, p):
                raise AlgebraError(f"modulus {self.poly_str(modulus)} is reducible over F_{p}")
        self.modulus: Poly = modulus
        self._build_tables()

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.q
        self._mul_t: list[list[int]] | None = None
        self._add_t: list[list[int]] | None = None
        self._inv_t: list[int] | None = None
        self._neg_t: list[int] | None = None
        if q > _TABLE_LIMIT:
            return
        if k == 1:
            self._add_t = [[(a + b) % p for b in range(p)] for a in range(p)]
            self._mul_t = [[(a * b) % p for b in range(p)] for a in range(p)]
            self._neg_t = [(-a) % p for a in range(p)]
            self._inv_t = [0] + [pow(a, p - 2, p) for a in range(1, p)]
            return
        polys = [_decode_poly(c, p, k) for c in range(q)]
        self._add_t = [
            [_encode_poly(tuple(_poly_sub(a, tuple(-x for x in b), p)), p) for b in polys]
            for a in polys
        ]
        self._mul_t = [
            [_encode_poly(_poly_mod(_poly_mul(a, b, p), self.modulus, p), p) for b in polys]
            for a in polys
        ]
        self._neg_t = [_encode_poly(tuple((-x) % p for x in a), p) for a in polys]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = _encode_poly(
                _poly_ext_gcd_inverse(_decode_poly(a, p, k), self.modulus, p), p
            )
        self._inv_t = inv

    # -- raw code arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return self._add_t[a][b]
        if self.k == 1:
            return (a + b) % self.p
        pa, pb = _decode_poly(a, self.p, self.k), _decode_poly(b, self.p, self.k)
        return _encode_poly(tuple(_poly_sub(pa, tuple((-x) % self.p for x in pb), self.p)), self.p)

    def neg(self, a: int) -> int:
        if self._neg_t is not None:
            return self._neg_t[a]
        if self.k == 1:
            return (-a) % self.p
        pa = _decode_poly(a, self.p, self.k)
        return _encode_poly(tuple((-x) % self.p for x in pa), self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return self._mul_t[a][b]
        if self.k == 1:
            return (a * b) % self.p
        pa, pb = _decode_poly(a, self.p, self.k), _decode_poly(b, self.p, self.k)
        return _encode_poly(_poly_mod(_poly_mul(pa, pb, self.p), self.modulus, self.p), self.p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise NotInvertibleError("division by zero in field")
        if self._inv_t is not None:
            return self._inv_t[a]
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        pa = _decode_poly(a, self.p, self.k)
        return _encode_poly(_poly_ext_gcd_inverse(pa, self.modulus, self.p), self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def scalar(self, n: int) -> int:
        """Image of the integer n under Z -> F_q (lands in the prime field)."""
        return n % self.p

    # -- element interface ---------------------------------------------------

    def element(self, value: int | Poly) -> "FieldElement":
        if isinstance(value, tuple):
            if len(value) > self.k:
                raise AlgebraError("coefficient vector longer than extension degree")
            value = _encode_poly(tuple(c % self.p for c in value), self.p)
        if not 0 <= value < self.q:
            raise AlgebraError(f"code {value} out of range for F_{self.q}")
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        return (FieldElement(self, c) for c in range(self.q))

    def coeffs(self, code: int) -> Poly:
        return _decode_poly(code, self.p, self.k)

    def mult_order(self, a: int) -> int:
        """Least t >= 1 with a**t == 1.  Divides q - 1."""
        if a == 0:
            raise AlgebraError("zero has no multiplicative order")
        t = self.q - 1
        for f in factorize(self.q - 1):
            while t % f == 0 and self.pow(a, t // f) == 1:
                t //= f
        return t

    # -- misc -----------------------------------------------------------------

    def poly_str(self, coeffs: Poly) -> str:
        terms = []
        for i in range(len(coeffs) - 1, -1, -1):
            c = coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return "+".join(terms) if terms else "0"

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"F{self.p}"
        return f"F{self.q} (mod {self.poly_str(self.modulus)})"


class FieldElement:
    """An element of F_{p^k}, stored as its canonical integer code."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    def _check(self, other: "FieldElement") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"field mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.ctx, self.ctx.add(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.ctx, self.ctx.sub(self.code, other.code))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.ctx, self.ctx.mul(self.code, other.code))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.ctx, self.ctx.div(self.code, other.code))

    def __pow__(self, n: int):
        return FieldElement(self.ctx, self.ctx.pow(self.code, n))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.inv(self.code))

    def mult_order(self) -> int:
        return self.ctx.mult_order(self.code)

    @property
    def coeffs(self) -> Poly:
        return self.ctx.coeffs(self.code)

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.ctx == other.ctx
            and self.code == other.code
        )

    def __hash__(self):
        return hash((self.ctx.q, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        if self.ctx.k == 1:
            return str(self.code)
        return f"[{self.ctx.poly_str(self.coeffs)}]"


# ---------------------------------------------------------------------------
# public constructors / parsing
# ---------------------------------------------------------------------------

def field_make(p: int, k: int = 1, modulus: Poly | str | None = None) -> FieldCtx:
    """Build F_{p^k}.  Omitting the modulus selects the canonical one."""
    if isinstance(modulus, str):
        modulus = parse_poly(modulus)
    return FieldCtx(p, k, modulus)


@lru_cache(maxsize=None)
def _cached_field(p: int, k: int) -> FieldCtx:
    return FieldCtx(p, k)


def parse_field(spec: str) -> FieldCtx:
    """Resolve a textual field spec like "F9" to its canonical context."""
    m = re.fullmatch(r"F(\d+)", spec.strip())
    if not m:
        raise ParseError(f"bad field spec {spec!r}; expected e.g. 'F9'")
    q = int(m.group(1))
    pk = prime_power(q)
    if pk is None:
        raise ParseError(f"{q} is not a prime power")
    return _cached_field(*pk)


_TERM_RE = re.compile(r"^(?:(\d+)\*?)?(?:x(?:\^(\d+))?)?$")


def parse_poly(text: str) -> Poly:
    """Parse a polynomial literal such as "x^2+x+1" over the integers.

    Coefficients are read as plain integers; reduction mod p happens in
    :class:`FieldCtx`.
    """
    text = text.replace(" ", "").replace("-", "+-")
    if not text:
        raise ParseError("empty polynomial literal")
    coeffs: dict[int, int] = {}
    for term in text.split("+"):
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        m = _TERM_RE.match(term)
        if not m or (m.group(1) is None and "x" not in term):
            raise ParseError(f"bad polynomial term {term!r}")
        coef = int(m.group(1)) if m.group(1) is not None else 1
        if "x" in term:
            exp = int(m.group(2)) if m.group(2) is not None else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coef
    deg = max(coeffs) if coeffs else 0
    return _poly_trim([coeffs.get(i, 0) for i in range(deg + 1)])
