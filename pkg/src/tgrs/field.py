"""Finite fields GF(p^m) in polynomial-basis representation.

An element with coefficient vector ``(c0, c1, ..., c_{m-1})`` (meaning
``c0 + c1*x + ... + c_{m-1}*x^(m-1)`` modulo the field modulus) is encoded as
the integer ``c0 + c1*p + ... + c_{m-1}*p^(m-1)``. Every array in the package
holds these integer codes. Multiplication goes through exp/log tables built
from the designated primitive element; addition is digit-wise mod p (plain XOR
in characteristic two).
"""

from __future__ import annotations

import functools
import itertools
import re
from collections.abc import Iterable, Sequence

import numpy as np

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    ElementSyntaxError,
    EOutOfRange,
    FieldMismatch,
    NoTableEntry,
    NotPrime,
    ReduciblePolynomial,
    ValueOutOfField,
)

MAX_FIELD_SIZE = 1 << 20

# Standard binary primitive polynomials, exponents of the nonzero terms.
# The GF(16) entry x^4 + x + 1 matches the usual choice omega^4 = omega + 1.
_BINARY_PRIMITIVE = {
    2: (2, 1, 0),
    3: (3, 1, 0),
    4: (4, 1, 0),
    5: (5, 2, 0),
    6: (6, 1, 0),
    7: (7, 1, 0),
    8: (8, 4, 3, 2, 0),
    9: (9, 4, 0),
    10: (10, 3, 0),
    11: (11, 2, 0),
    12: (12, 6, 4, 1, 0),
    13: (13, 4, 3, 1, 0),
    14: (14, 10, 6, 1, 0),
    15: (15, 1, 0),
    16: (16, 12, 3, 1, 0),
    17: (17, 3, 0),
    18: (18, 7, 0),
    19: (19, 5, 2, 1, 0),
    20: (20, 3, 0),
}


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


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _scalar(x) -> bool:
    return isinstance(x, (int, np.integer))


# --- polynomials over GF(p) as ascending coefficient lists -------------------


def _poly_rem(a: list[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial b."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            shift = i - db
            for j in range(db + 1):
                a[shift + j] = (a[shift + j] - c * b[j]) % p
    return [c % p for c in a[:db]]


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not any(_poly_rem(modulus, divisor, p)):
                return False
    return True


def _monic_of(exps: Iterable[int], m: int) -> tuple[int, ...]:
    coeffs = [0] * (m + 1)
    for e in exps:
        coeffs[e] = 1
    return tuple(coeffs)


# --- raw element arithmetic used only while building tables -----------------


def _digits(a: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    a = 0
    for d in reversed(ds):
        a = a * p + d
    return a


def _slow_mul(a: int, b: int, p: int, m: int, modulus: Sequence[int]) -> int:
    if m == 1:
        return a * b % p
    da, db = _digits(a, p, m), _digits(b, p, m)
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] += x * y
    return _undigits(_poly_rem(prod, modulus, p), p)


def _slow_pow(a: int, e: int, p: int, m: int, modulus: Sequence[int]) -> int:
    result = 1
    while e:
        if e & 1:
            result = _slow_mul(result, a, p, m, modulus)
        a = _slow_mul(a, a, p, m, modulus)
        e >>= 1
    return result


def _has_full_order(g: int, p: int, m: int, modulus: Sequence[int]) -> bool:
    order = p**m - 1
    if g == 0:
        return False
    if order == 1:
        return g == 1
    return all(_slow_pow(g, order // r, p, m, modulus) != 1 for r in prime_factors(order))


@functools.lru_cache(maxsize=None)
def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    if p == 2 and m in _BINARY_PRIMITIVE:
        return _monic_of(_BINARY_PRIMITIVE[m], m)
    # smallest (by integer code of the tail) primitive monic polynomial
    for tail_code in range(1, p**m):
        tail = _digits(tail_code, p, m)
        if tail[0] == 0:
            continue
        mod = tuple(tail) + (1,)
        if _is_irreducible(mod, p) and _has_full_order(p, p, m, mod):
            return mod
    raise NoTableEntry(f"no primitive polynomial found for GF({p}^{m})")  # pragma: no cover


class FieldSpec:
    """GF(p^m) with an explicit monic irreducible modulus.

    Arithmetic methods accept either Python ints or integer numpy arrays of
    element codes and return the same kind.
    """

    __slots__ = (
        "p", "m", "q", "modulus", "primitive", "exp", "log", "weights",
        "_exp_l", "_log_l", "_digits_arr", "_digits_list",
    )

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(int(c) for c in modulus)
        self.primitive = self._find_primitive()
        self._build_tables()

    # construction ---------------------------------------------------------

    def _find_primitive(self) -> int:
        p, m, q = self.p, self.m, self.q
        if q == 2:
            return 1
        start = p if m > 1 else 2  # x itself first for extension fields
        candidates = itertools.chain([start], range(2, q))
        for g in candidates:
            if _has_full_order(g, p, m, self.modulus):
                return g
        raise NoTableEntry("field has no primitive element")  # pragma: no cover

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        n1 = q - 1
        exp = [0] * (2 * n1)
        log = [0] * q
        g = self.primitive
        cur = 1
        if p == 2 and m > 1 and g == 2:
            modint = _undigits(self.modulus, 2)
            top = 1 << m
            for i in range(n1):
                exp[i] = cur
                log[cur] = i
                cur <<= 1
                if cur & top:
                    cur ^= modint
        else:
            for i in range(n1):
                exp[i] = cur
                log[cur] = i
                cur = _slow_mul(cur, g, p, m, self.modulus)
        exp[n1:] = exp[:n1]
        self._exp_l = exp
        self._log_l = log
        self.exp = np.asarray(exp, dtype=np.int64)
        self.log = np.asarray(log, dtype=np.int64)
        self.weights = p ** np.arange(m, dtype=np.int64)
        self._digits_arr = None
        self._digits_list = None

    @property
    def digits(self) -> np.ndarray:
        """(q, m) table of coefficient vectors; built on first use."""
        if self._digits_arr is None:
            codes = np.arange(self.q, dtype=np.int64)
            self._digits_arr = (codes[:, None] // self.weights[None, :]) % self.p
        return self._digits_arr

    @property
    def _digits_l(self) -> list[tuple[int, ...]]:
        if self._digits_list is None:
            self._digits_list = [tuple(r) for r in self.digits.tolist()]
        return self._digits_list

    # identity -------------------------------------------------------------

    def _key(self) -> tuple:
        return (self.p, self.m, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.m == 1 else f"GF({self.p}^{self.m})"

    @property
    def name(self) -> str:
        return f"GF({self.q})"

    @property
    def kernel_args(self) -> tuple:
        """Positional tail passed to the numba kernels."""
        return (self.exp, self.log, self.p, self.m, self.q)

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, d: dict) -> FieldSpec:
        return field_new(int(d["p"]), int(d.get("m", 1)), d.get("modulus"))

    # scalar / array arithmetic ------------------------------------------

    def add(self, a, b):
        p = self.p
        if _scalar(a) and _scalar(b):
            a, b = int(a), int(b)
            if p == 2:
                return a ^ b
            if self.m == 1:
                return (a + b) % p
            da, db = self._digits_l[a], self._digits_l[b]
            return _undigits([(x + y) % p for x, y in zip(da, db)], p)
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        return ((self.digits[a] + self.digits[b]) % p) @ self.weights

    def neg(self, a):
        p = self.p
        if _scalar(a):
            a = int(a)
            if p == 2:
                return a
            if self.m == 1:
                return (-a) % p
            return _undigits([(-x) % p for x in self._digits_l[a]], p)
        a = np.asarray(a, dtype=np.int64)
        if p == 2:
            return a.copy()
        if self.m == 1:
            return (-a) % p
        return ((-self.digits[a]) % p) @ self.weights

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if _scalar(a) and _scalar(b):
            a, b = int(a), int(b)
            if a == 0 or b == 0:
                return 0
            return self._exp_l[self._log_l[a] + self._log_l[b]]
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        r = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def inv(self, a):
        if _scalar(a):
            a = int(a)
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return self._exp_l[(self.q - 1 - self._log_l[a])]
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self.exp[self.q - 1 - self.log[a]]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        """a**e; ``pow(0, 0) == 1`` (empty product)."""
        e = int(e)
        if _scalar(a):
            a = int(a)
            if e < 0:
                a, e = self.inv(a), -e
            result, base = 1, a
            while e:
                if e & 1:
                    result = self.mul(result, base)
                base = self.mul(base, base)
                e >>= 1
            return result
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if e < 0 and np.any(a == 0):
            raise DivisionByZero("negative power of zero")
        r = self.exp[(self.log[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0, r)

    def frob(self, a, e: int):
        """x -> x^(p^e) for 0 <= e < m."""
        if not 0 <= e < self.m:
            raise EOutOfRange(f"e={e} outside [0, {self.m})")
        if e == 0:
            return int(a) if _scalar(a) else np.asarray(a, dtype=np.int64).copy()
        return self.pow(a, self.p**e)

    def sum(self, values) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, int(v))
        return acc

    def prod(self, values) -> int:
        acc = 1
        for v in values:
            acc = self.mul(acc, int(v))
        return acc

    # elements -------------------------------------------------------------

    def elements(self) -> list[int]:
        """Codes in canonical order: 0, g^0, g^1, ..., g^(q-2)."""
        return [0] + self._exp_l[: self.q - 1]

    def power_of_primitive(self, k: int) -> int:
        return self._exp_l[k % (self.q - 1)]

    def discrete_log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log_l[a]

    def element(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch(f"{x.field!r} vs {self!r}")
            return x
        if isinstance(x, str):
            return parse_element(x, self)
        x = int(x)
        if not 0 <= x < self.q:
            raise ValueOutOfField(f"code {x} outside [0, {self.q})")
        return FieldElement(self, x)

    def code(self, x) -> int:
        """Integer code of an element given as FieldElement, text or code."""
        return self.element(x).value

    def codes(self, xs) -> list[int]:
        return [self.code(x) for x in xs]

    def format(self, a: int) -> str:
        return format_element(FieldElement(self, int(a)))

    def random(self, rng: np.random.Generator, size=None, nonzero: bool = False):
        lo = 1 if nonzero else 0
        return rng.integers(lo, self.q, size=size, dtype=np.int64)


class FieldElement:
    """Value type: an element of a specific FieldSpec."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = int(value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(_digits(self.value, self.field.p, self.field.m))

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field.code(int(other))
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field._key(), self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{format_element(self)} in {self.field!r}"

    def __str__(self) -> str:
        return format_element(self)


@functools.lru_cache(maxsize=64)
def _field_cached(p: int, m: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def field_new(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validated GF(p^m); ``modulus`` lists coefficients in ascending degree.

    Without a modulus the built-in table is used (x^4+x+1 for GF(16)); prime
    fields use the formal modulus ``x``.
    """
    p, m = int(p), int(m)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_FIELD_SIZE:
        raise NoTableEntry(f"GF({p}^{m}) exceeds the supported size 2^20")
    if modulus is None:
        mod = _default_modulus(p, m)
    else:
        mod = tuple(int(c) for c in modulus)
        if len(mod) != m + 1:
            raise DegreeMismatch(f"modulus needs {m + 1} coefficients, got {len(mod)}")
        if any(not 0 <= c < p for c in mod):
            raise ValueOutOfField("modulus coefficients must lie in [0, p)")
        if mod[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if m > 1 and not _is_irreducible(mod, p):
            raise ReduciblePolynomial(f"modulus {list(mod)} is reducible over GF({p})")
    return _field_cached(p, m, mod)


# --- free-function API ------------------------------------------------------


def _same_field(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    return a.field


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    F = _same_field(a, b)
    ops = {"add": F.add, "sub": F.sub, "mul": F.mul, "div": F.div}
    if op not in ops:
        raise ValueError(f"unknown op {op!r}")
    return FieldElement(F, ops[op](a.value, b.value))


def power(a: FieldElement, e: int) -> FieldElement:
    return FieldElement(a.field, a.field.pow(a.value, e))


def frobenius(a: FieldElement, e: int) -> FieldElement:
    return FieldElement(a.field, a.field.frob(a.value, e))


def enumerate_field(spec: FieldSpec) -> list[FieldElement]:
    return [FieldElement(spec, c) for c in spec.elements()]


_POWER_RE = re.compile(r"^w(?:\^\s*(-?\d+))?$")
_COEFF_RE = re.compile(r"^\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]$")


def parse_element(s: str, spec: FieldSpec) -> FieldElement:
    """Parse ``"w^k"``, ``"w"``, ``"0"``, ``"1"``, ``"[c0,c1,...]"`` or a
    decimal residue (prime fields only)."""
    text = str(s).strip().replace(" ", "")
    if not text:
        raise ElementSyntaxError("empty element")
    m = _POWER_RE.match(text)
    if m:
        k = int(m.group(1)) if m.group(1) is not None else 1
        return FieldElement(spec, spec.power_of_primitive(k))
    m = _COEFF_RE.match(text)
    if m:
        coeffs = [int(c) for c in m.group(1).split(",")] if m.group(1) else []
        if len(coeffs) > spec.m:
            raise ValueOutOfField(f"{len(coeffs)} coefficients for degree-{spec.m} field")
        if any(not 0 <= c < spec.p for c in coeffs):
            raise ValueOutOfField(f"coefficient outside [0, {spec.p})")
        coeffs += [0] * (spec.m - len(coeffs))
        return FieldElement(spec, _undigits(coeffs, spec.p))
    if re.fullmatch(r"-?\d+", text):
        v = int(text)
        if spec.m > 1 and v not in (0, 1):
            raise ElementSyntaxError(f"decimal {text!r} is only meaningful in prime fields")
        if not 0 <= v < spec.p:
            raise ValueOutOfField(f"{v} outside [0, {spec.p})")
        return FieldElement(spec, v)
    raise ElementSyntaxError(f"cannot parse {s!r}")


def format_element(a: FieldElement) -> str:
    F = a.field
    if F.m == 1:
        return str(a.value)
    if a.value in (0, 1):
        return str(a.value)
    return f"w^{F.discrete_log(a.value)}"
