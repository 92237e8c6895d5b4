"""Finite fields GF(p^k) with packed-integer elements and log tables.

An element is stored as the integer sum(c_i * p**i) of its polynomial-basis
coordinates. That integer is also the enumeration order of the field, so the
zero element comes first and GF(p) keeps its natural order.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple, Type, Union

import galois
import numpy as np
from sympy import factorint
from sympy.ntheory import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_gcd, gf_pow_mod, gf_sub

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 2 ** 20
ADD_TABLE_LIMIT = 256


class FieldError(ValueError):
    """Base class for field construction errors."""


class NonPrime(FieldError):
    """The characteristic is not a prime."""


class TooLarge(FieldError):
    """p^k exceeds the configured bound."""


class SpecMismatch(FieldError):
    """Elements from two different fields were combined."""


class NotASubfield(FieldError):
    """GF(r) does not embed in GF(q)."""


class DivByZero(ZeroDivisionError):
    """Division by the zero element."""


def _digits(value: int, p: int, k: int) -> List[int]:
    out = []
    for _ in range(k):
        value, d = divmod(value, p)
        out.append(d)
    return out


def _pack(digits: Sequence[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + (int(d) % p)
    return value


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """
    Test a monic polynomial over Z_p for irreducibility.

    Roots are rejected first; then every factor of degree i <= k/2 is
    ruled out through gcd(f, x^(p^i) - x).

    Args:
        modulus: Coefficients, low degree first
        p: Prime characteristic

    Returns:
        True if the polynomial is irreducible
    """
    k = len(modulus) - 1
    if k == 1:
        return True
    f = [int(c) % p for c in reversed(modulus)]
    for a in range(p):
        acc = 0
        for c in f:
            acc = (acc * a + c) % p
        if acc == 0:
            return False
    x = [1, 0]
    for i in range(1, k // 2 + 1):
        h = gf_sub(gf_pow_mod(x, p ** i, f, p, ZZ), x, p, ZZ)
        if gf_gcd(f, h, p, ZZ) != [1]:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^k) defined by a monic irreducible modulus (low degree first)."""

    p: int
    k: int
    modulus: Tuple[int, ...]

    def __post_init__(self):
        if not isprime(self.p):
            raise NonPrime(f"{self.p} is not prime")
        if self.k < 1 or len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise FieldError(f"modulus {self.modulus} is not monic of degree {self.k}")
        if not is_irreducible(self.modulus, self.p):
            raise FieldError(f"modulus {self.modulus} is reducible over Z_{self.p}")

    def __str__(self) -> str:
        return f"GF({self.order})"

    @property
    def order(self) -> int:
        return self.p ** self.k

    @property
    def q(self) -> int:
        return self.order

    # ------------------------------------------------------------------
    # tables

    def _mul_digits(self, a: List[int], b: List[int]) -> List[int]:
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg] % p
            if c:
                for t in range(k + 1):
                    prod[deg - k + t] -= c * self.modulus[t]
        return [c % p for c in prod[:k]]

    def _slow_mul(self, x: int, y: int) -> int:
        if self.k == 1:
            return (x * y) % self.p
        return _pack(self._mul_digits(_digits(x, self.p, self.k), _digits(y, self.p, self.k)), self.p)

    def _slow_pow(self, x: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, x)
            x = self._slow_mul(x, x)
            e >>= 1
        return result

    @cached_property
    def primitive_value(self) -> int:
        """Smallest generator of the multiplicative group."""
        q = self.order
        primes = list(factorint(q - 1)) if q > 2 else []
        for g in range(1, q):
            if all(self._slow_pow(g, (q - 1) // ell) != 1 for ell in primes):
                return g
        raise FieldError(f"no primitive element in {self}")

    @cached_property
    def _tables(self) -> Tuple[List[int], List[int]]:
        q = self.order
        g = self.primitive_value
        exp = [1] * (2 * (q - 1))
        log = [0] * q
        g_digits = _digits(g, self.p, self.k)
        current = 1
        for i in range(q - 1):
            exp[i] = current
            log[current] = i
            if self.k == 1:
                current = (current * g) % self.p
            else:
                current = _pack(self._mul_digits(_digits(current, self.p, self.k), g_digits), self.p)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        logger.debug("built exp/log tables for %s with generator %d", self, g)
        return exp, log

    @cached_property
    def _exp(self) -> List[int]:
        return self._tables[0]

    @cached_property
    def _log(self) -> List[int]:
        return self._tables[1]

    @cached_property
    def _add_rows(self) -> Optional[List[List[int]]]:
        if self.p == 2 or self.k == 1 or self.order > ADD_TABLE_LIMIT:
            return None
        q = self.order
        return [[self._digit_add(x, y) for y in range(q)] for x in range(q)]

    @cached_property
    def galois_field(self) -> Type[galois.FieldArray]:
        """The same field as a galois array class, built on this modulus so packed values agree."""
        if self.k == 1:
            return galois.GF(self.p)
        modulus = galois.Poly(list(reversed(self.modulus)), field=galois.GF(self.p))
        return galois.GF(self.order, irreducible_poly=modulus)

    @cached_property
    def exp_array(self) -> np.ndarray:
        return np.asarray(self._exp, dtype=np.int64)

    @cached_property
    def log_array(self) -> np.ndarray:
        return np.asarray(self._log, dtype=np.int64)

    # ------------------------------------------------------------------
    # integer-level arithmetic

    def _digit_add(self, x: int, y: int) -> int:
        p = self.p
        result, place = 0, 1
        while x or y:
            x, a = divmod(x, p)
            y, b = divmod(y, p)
            result += ((a + b) % p) * place
            place *= p
        return result

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if self.k == 1:
            return (x + y) % self.p
        rows = self._add_rows
        if rows is not None:
            return rows[x][y]
        return self._digit_add(x, y)

    def neg(self, x: int) -> int:
        if self.p == 2 or x == 0:
            return x
        if self.k == 1:
            return self.p - x
        p = self.p
        result, place = 0, 1
        while x:
            x, a = divmod(x, p)
            result += ((p - a) % p) * place
            place *= p
        return result

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivByZero(f"inverse of zero in {self}")
        return self._exp[(self.order - 1 - self._log[x]) % (self.order - 1)]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if e == 0:
            return 1
        if x == 0:
            if e < 0:
                raise DivByZero(f"negative power of zero in {self}")
            return 0
        return self._exp[(self._log[x] * e) % (self.order - 1)]

    def order_of(self, x: int) -> int:
        """Multiplicative order of a nonzero element."""
        if x == 0:
            raise DivByZero("zero has no multiplicative order")
        return (self.order - 1) // gcd(self._log[x], self.order - 1)

    def scalar_value(self, n: int) -> int:
        """Packed value of n * 1."""
        return n % self.p

    def log(self, x: int) -> int:
        if x == 0:
            raise DivByZero("log of zero")
        return self._log[x]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.order - 1)]

    # ------------------------------------------------------------------
    # numpy helpers for vectorised scans

    def add_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.k == 1:
            return (a + b) % self.p
        result = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        place = 1
        for _ in range(self.k):
            result += (((a // place) % self.p + (b // place) % self.p) % self.p) * place
            place *= self.p
        return result

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        product = self.exp_array[self.log_array[a] + self.log_array[b]]
        return np.where((a == 0) | (b == 0), 0, product)

    def pow_array(self, a: np.ndarray, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        powered = self.exp_array[(self.log_array[a] * e) % (self.order - 1)]
        return np.where(a == 0, 0, powered)

    # ------------------------------------------------------------------
    # element construction

    def element(self, x: Union[int, Sequence[int], "FieldElement"]) -> "FieldElement":
        """Element from a packed value or a low-to-high coefficient list."""
        if isinstance(x, FieldElement):
            if x.spec != self:
                raise SpecMismatch(f"{x!r} is not in {self}")
            return x
        if isinstance(x, (int, np.integer)):
            if not 0 <= int(x) < self.order:
                raise FieldError(f"value {x} out of range for {self}")
            return FieldElement(self, int(x))
        coeffs = list(x)
        if len(coeffs) != self.k or any(not 0 <= int(c) < self.p for c in coeffs):
            raise FieldError(f"{coeffs} is not a coefficient vector of {self}")
        return FieldElement(self, _pack(coeffs, self.p))

    def scalar(self, n: int) -> "FieldElement":
        return FieldElement(self, self.scalar_value(n))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def primitive_element(self) -> "FieldElement":
        return FieldElement(self, self.primitive_value)

    def elements(self) -> List["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.order)]

    def to_json(self) -> Dict[str, object]:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "FieldSpec":
        return cls(int(data["p"]), int(data["k"]), tuple(int(c) for c in data["modulus"]))


class FieldElement:
    """An element of GF(p^k); plain ints coerce as multiples of 1."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        self.spec = spec
        self.value = value

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return tuple(_digits(self.value, self.spec.p, self.spec.k))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise SpecMismatch(f"cannot combine {self.spec} and {other.spec}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.spec.scalar_value(int(other))
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def _wrap(self, value: int) -> "FieldElement":
        return FieldElement(self.spec, value)

    def __add__(self, other):
        return self._wrap(self.spec.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.spec.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return self._wrap(self.spec.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return self._wrap(self.spec.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.spec.div(self.value, self._coerce(other)))

    def __rtruediv__(self, other):
        return self._wrap(self.spec.div(self._coerce(other), self.value))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.spec.pow(self.value, int(e)))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.spec.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and (other.spec is self.spec or other.spec == self.spec)
        if isinstance(other, (int, np.integer)):
            return self.value == self.spec.scalar_value(int(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __lt__(self, other: "FieldElement") -> bool:
        return self.value < self._coerce(other)

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"FieldElement({self.spec}, {self.value})"

    def __str__(self) -> str:
        return str(self.value)

    def to_json(self) -> List[int]:
        return list(self.coeffs)


@lru_cache(maxsize=None)
def _smallest_irreducible(p: int, k: int) -> FieldSpec:
    for value in range(p ** k):
        modulus = tuple(_digits(value, p, k)) + (1,)
        if is_irreducible(modulus, p):
            logger.debug("GF(%d^%d) modulus %s", p, k, modulus)
            return FieldSpec(p, k, modulus)
    raise FieldError(f"no irreducible polynomial of degree {k} over Z_{p}")


def field_create(p: int, k: int = 1, max_order: Optional[int] = None) -> FieldSpec:
    """
    Create GF(p^k) with the smallest monic irreducible modulus.

    Moduli are compared as packed integers, so the highest coefficients
    decide first; GF(8) gets x^3 + x + 1.

    Args:
        p: Prime characteristic
        k: Extension degree
        max_order: Upper bound on p^k (default 2^20)

    Returns:
        The cached FieldSpec
    """
    p, k = int(p), int(k)
    if not isprime(p):
        raise NonPrime(f"{p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree must be positive, not {k}")
    bound = DEFAULT_MAX_ORDER if max_order is None else int(max_order)
    if p ** k > bound:
        raise TooLarge(f"{p}^{k} exceeds the field bound {bound}")
    return _smallest_irreducible(p, k)


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply one of add, sub, mul, div to two elements of the same field."""
    if a.spec != b.spec:
        raise SpecMismatch(f"cannot combine {a.spec} and {b.spec}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def enumerate_elements(spec: FieldSpec) -> List[FieldElement]:
    """All q elements, zero first, in ascending packed order."""
    return spec.elements()


@dataclass(frozen=True)
class SubfieldEmbedding:
    """Field homomorphism GF(r) -> GF(q) stored as a value table."""

    sub: FieldSpec
    sup: FieldSpec
    generator_image: int
    table: Tuple[int, ...]

    def __call__(self, x: Union[int, FieldElement]) -> FieldElement:
        value = x.value if isinstance(x, FieldElement) else int(x)
        return FieldElement(self.sup, self.table[value])

    @cached_property
    def _inverse(self) -> Dict[int, int]:
        return {image: value for value, image in enumerate(self.table)}

    def contains(self, y: Union[int, FieldElement]) -> bool:
        value = y.value if isinstance(y, FieldElement) else int(y)
        return value in self._inverse

    def preimage(self, y: Union[int, FieldElement]) -> FieldElement:
        value = y.value if isinstance(y, FieldElement) else int(y)
        if value not in self._inverse:
            raise ValueError(f"{value} is not in the image of {self.sub}")
        return FieldElement(self.sub, self._inverse[value])


def _minimal_polynomial(spec: FieldSpec, g: int) -> List[int]:
    poly = [1]
    for i in range(spec.k):
        root = spec.pow(g, spec.p ** i)
        shifted = [0] + poly
        for j, c in enumerate(poly):
            shifted[j] = spec.sub(shifted[j], spec.mul(c, root))
        poly = shifted
    return poly


@lru_cache(maxsize=None)
def embed_subfield(sub: FieldSpec, sup: FieldSpec) -> SubfieldEmbedding:
    """
    Embed GF(r) into GF(q).

    The generator of GF(r)* is sent to the smallest element of GF(q) of
    order r - 1 that is a root of its minimal polynomial.

    Args:
        sub: The subfield GF(p^e)
        sup: The field GF(p^m), e dividing m

    Returns:
        SubfieldEmbedding
    """
    if sub.p != sup.p or sup.k % sub.k:
        raise NotASubfield(f"{sub} is not a subfield of {sup}")
    r = sub.order
    g = sub.primitive_value
    minpoly = _minimal_polynomial(sub, g)
    for h in range(1, sup.order):
        if sup.order_of(h) != r - 1:
            continue
        acc = 0
        for c in reversed(minpoly):
            acc = sup.add(sup.mul(acc, h), c)
        if acc == 0:
            break
    else:
        raise NotASubfield(f"no root of the minimal polynomial of {sub} in {sup}")
    table = [0] * r
    power = 1
    for i in range(r - 1):
        table[sub.exp(i)] = power
        power = sup.mul(power, h)
    logger.debug("embedded %s in %s sending %d to %d", sub, sup, g, h)
    return SubfieldEmbedding(sub, sup, h, tuple(table))
