"""Arithmetic in GF(q), q = p^e.

Elements are encoded as integers ``0 .. q-1``.  For a prime field the
encoding is the residue; for an extension field it is the base-``p``
packing of the coefficient vector of the residue polynomial, constant
term in the least significant digit.  Encoding 0 is zero and 1 is one.

Every arithmetic method of :class:`FiniteField` works on plain integers
and on integer ``numpy`` arrays alike, which is what the enumeration
code uses.  :class:`FieldElement` is the scalar wrapper with operator
overloading.
"""
from __future__ import annotations

import functools
import itertools
from typing import Iterator, Sequence

import numpy as np

MAX_ORDER = 1 << 16
TABLE_ORDER = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


# --- polynomials over GF(p), coefficient lists, lowest degree first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    m = _trim(list(m))
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_rem(prod, m, p)


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree ``1 .. e//2``."""
    f = _trim([c % p for c in coeffs])
    e = len(f) - 1
    if e < 1:
        return False
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_rem(f, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``e`` over GF(p).

    Coefficient tuples are compared lowest degree first.
    """
    for low in itertools.product(range(p), repeat=e):
        cand = tuple(low) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


def _scalar(x):
    return int(x) if np.ndim(x) == 0 else x


class FiniteField:
    """The finite field GF(p^e).

    Construction is deterministic: unless ``modulus`` is given, an extension
    field uses :func:`smallest_irreducible`.  Addition, multiplication and
    inverse tables are precomputed for ``q <= 256``; larger fields compute
    on the fly (modular arithmetic, or digit-wise addition plus log/exp
    multiplication for extensions).  Instances are immutable.
    """

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        if p**e > MAX_ORDER:
            raise ValueError(f"field order {p}^{e} exceeds the supported maximum {MAX_ORDER}")
        self.p = p
        self.degree = e
        self.order = p**e
        if e == 1:
            if modulus is not None:
                raise ValueError("prime fields take no modulus")
            self.modulus = None
        else:
            if modulus is None:
                modulus = smallest_irreducible(p, e)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {e}")
            if not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
            self.modulus = modulus
        self._weights = p ** np.arange(e, dtype=np.int64)
        self._exp = self._log = None
        self._add_t = self._mul_t = self._neg_t = self._inv_t = None
        if self.order <= TABLE_ORDER:
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _digits(self, a):
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._weights) % self.p

    def _pack(self, digits):
        return (np.asarray(digits, dtype=np.int64) * self._weights).sum(axis=-1)

    def _code_to_poly(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.degree)]

    def _poly_to_code(self, c: Sequence[int]) -> int:
        return sum(int(ci) * self.p**i for i, ci in enumerate(c))

    def _mul_slow(self, a: int, b: int) -> int:
        if self.degree == 1:
            return a * b % self.p
        prod = _poly_mulmod(self._code_to_poly(a), self._code_to_poly(b), self.modulus, self.p)
        return self._poly_to_code(prod)

    def _ensure_log(self) -> None:
        if self._exp is not None:
            return
        q = self.order
        factors = [r for r in range(2, q) if (q - 1) % r == 0 and is_prime(r)]

        def power(a, n):
            result, base = 1, a
            while n:
                if n & 1:
                    result = self._mul_slow(result, base)
                base = self._mul_slow(base, base)
                n >>= 1
            return result

        gen = next(g for g in range(2, q) if all(power(g, (q - 1) // r) != 1 for r in factors)) \
            if q > 2 else 1
        exp = np.empty(q - 1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            x = self._mul_slow(x, gen)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self._exp, self._log = exp, log

    def _build_tables(self) -> None:
        q = self.order
        a = np.arange(q, dtype=np.int64)
        if self.degree == 1:
            add = (a[:, None] + a[None, :]) % q
            mul = (a[:, None] * a[None, :]) % q
        else:
            d = self._digits(a)
            add = self._pack((d[:, None, :] + d[None, :, :]) % self.p)
            self._ensure_log()
            la = self._log
            mul = self._exp[(la[:, None] + la[None, :]) % (q - 1)]
            mul[0, :] = 0
            mul[:, 0] = 0
        neg = np.argmin(add, axis=1)
        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(mul == 1)
        inv[rows] = cols
        for t in (add, mul, neg, inv):
            t.setflags(write=False)
        self._add_t, self._mul_t, self._neg_t, self._inv_t = add, mul, neg, inv

    # -- identity ------------------------------------------------------------

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def spec(self) -> str:
        """The field spec string: ``"q"`` for prime fields, ``"p^e"`` otherwise."""
        return str(self.p) if self.degree == 1 else f"{self.p}^{self.degree}"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.degree, self.modulus) == (other.p, other.degree, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.degree, self.modulus))

    def __repr__(self):
        if self.modulus is None:
            return f"GF({self.order})"
        return f"GF({self.spec}, modulus={self.modulus})"

    # -- elements ------------------------------------------------------------

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(f"{value!r} does not belong to {self!r}")
            return value
        value = int(value)
        if self.degree == 1:
            value %= self.p
        elif not 0 <= value < self.order:
            raise ValueError(f"encoding {value} out of range for {self!r}")
        return FieldElement(value, self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(v, self) for v in range(self.order)]

    def units(self) -> list[FieldElement]:
        """The ``q-1`` nonzero elements in ascending encoding order."""
        return [FieldElement(v, self) for v in range(1, self.order)]

    def unit_codes(self) -> np.ndarray:
        return np.arange(1, self.order, dtype=np.int64)

    # -- vectorized arithmetic on encodings ----------------------------------

    def add(self, a, b):
        if self._add_t is not None:
            return _scalar(self._add_t[a, b])
        if self.degree == 1:
            return _scalar((np.asarray(a, dtype=np.int64) + b) % self.p)
        return _scalar(self._pack((self._digits(a) + self._digits(b)) % self.p))

    def neg(self, a):
        if self._neg_t is not None:
            return _scalar(self._neg_t[a])
        if self.degree == 1:
            return _scalar((-np.asarray(a, dtype=np.int64)) % self.p)
        return _scalar(self._pack((-self._digits(a)) % self.p))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._mul_t is not None:
            return _scalar(self._mul_t[a, b])
        if self.degree == 1:
            return _scalar((np.asarray(a, dtype=np.int64) * b) % self.p)
        self._ensure_log()
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        out = self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return _scalar(np.where((a == 0) | (b == 0), 0, out))

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("0 has no inverse in a field")
        if self._inv_t is not None:
            return _scalar(self._inv_t[a])
        if self.degree == 1:
            return self.pow(a, self.p - 2)
        self._ensure_log()
        return _scalar(self._exp[(-self._log[np.asarray(a)]) % (self.order - 1)])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        n = int(n)
        if n < 0:
            a, n = self.inv(a), -n
        if n == 0:
            return _scalar(np.ones_like(np.asarray(a, dtype=np.int64)))
        # a^n == a^((n-1) mod (q-1) + 1) for every a, including 0
        n = (n - 1) % (self.order - 1) + 1
        result, base = None, a
        while n:
            if n & 1:
                result = base if result is None else self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return _scalar(result)

    def dot(self, a, b):
        """Field dot product along the last axis."""
        prod = self.mul(a, b)
        prod = np.asarray(prod)
        acc = np.zeros(prod.shape[:-1], dtype=np.int64)
        for i in range(prod.shape[-1]):
            acc = self.add(acc, prod[..., i])
        return _scalar(acc)


class FieldElement:
    """A scalar of a specific :class:`FiniteField`."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: FiniteField):
        self.value = value
        self.field = field

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field(other).value
        return NotImplemented

    def _new(self, v) -> FieldElement:
        return FieldElement(int(v), self.field)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.field.div(o, self.value))

    def __neg__(self):
        return self._new(self.field.neg(self.value))

    def __pow__(self, n):
        if isinstance(n, FieldElement):
            n = n.value
        return self._new(self.field.pow(self.value, int(n)))

    def inverse(self) -> FieldElement:
        return self._new(self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    __index__ = __int__

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == self.field(other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field))

    def __repr__(self):
        return f"{self.field!r}({self.value})"


@functools.lru_cache(maxsize=None)
def field_new(p: int, e: int = 1) -> FiniteField:
    """Cached constructor: one shared instance per ``(p, e)``."""
    return FiniteField(p, e)


def GF(q: int) -> FiniteField:
    return field_new(*prime_power(q))


def parse_field(spec: str | int) -> FiniteField:
    """Parse ``"p^e"`` or ``"q"`` (a prime or prime power)."""
    s = str(spec).strip()
    try:
        if "^" in s:
            p, e = (int(t) for t in s.split("^"))
            return field_new(p, e)
        return GF(int(s))
    except ValueError as exc:
        raise ValueError(f"bad field spec {spec!r}: {exc}") from None


def iter_unit_tuples(field: FiniteField, n: int, chunk_size: int = 1 << 16) -> Iterator[np.ndarray]:
    """Yield all of ``(F*)^n`` as ``(rows, n)`` arrays of encodings.

    Rows come in lexicographic order of encodings, first coordinate slowest.
    """
    base = field.order - 1
    total = base**n
    units = field.unit_codes()
    place = base ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk_size):
        idx = np.arange(start, min(start + chunk_size, total), dtype=np.int64)
        yield units[(idx[:, None] // place[None, :]) % base]
