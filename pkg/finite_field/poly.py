"""Dense univariate polynomials over GF(q)."""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from .field import DivByZero, FieldElement, FieldSpec, SpecMismatch


def _trim(values: Sequence[int]) -> Tuple[int, ...]:
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Poly:
    """Polynomial with packed coefficient values, low degree first."""

    spec: FieldSpec
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def constant(cls, spec: FieldSpec, c: Union[int, FieldElement]) -> "Poly":
        value = c.value if isinstance(c, FieldElement) else int(c)
        return cls(spec, (value,))

    @classmethod
    def x(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, (0, 1))

    @classmethod
    def from_roots(cls, spec: FieldSpec, roots: Iterable[Union[int, FieldElement]]) -> "Poly":
        """The monic polynomial prod(X - r)."""
        result = cls(spec, (1,))
        for r in roots:
            value = r.value if isinstance(r, FieldElement) else int(r)
            result = result * cls(spec, (spec.neg(value), 1))
        return result

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: "Poly") -> None:
        if other.spec != self.spec:
            raise SpecMismatch(f"polynomials over {self.spec} and {other.spec}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.spec, [self.spec.add(self.coefficient(i), other.coefficient(i)) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.spec, [self.spec.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: Union["Poly", int, FieldElement]) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.spec, ())
        spec = self.spec
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = spec.add(out[i + j], spec.mul(a, b))
        return Poly(spec, out)

    __rmul__ = __mul__

    def scale(self, c: Union[int, FieldElement]) -> "Poly":
        """Multiply by a field element; plain ints are packed values."""
        value = c.value if isinstance(c, FieldElement) else int(c)
        return Poly(self.spec, [self.spec.mul(value, a) for a in self.coeffs])

    def __divmod__(self, divisor: "Poly") -> Tuple["Poly", "Poly"]:
        self._check(divisor)
        if divisor.is_zero():
            raise DivByZero("polynomial division by zero")
        spec = self.spec
        remainder = list(self.coeffs)
        d = divisor.degree
        lead_inv = spec.inv(divisor.leading)
        quotient = [0] * max(len(remainder) - d, 0)
        for shift in range(len(remainder) - 1 - d, -1, -1):
            c = spec.mul(remainder[shift + d], lead_inv)
            if c == 0:
                continue
            quotient[shift] = c
            for i, b in enumerate(divisor.coeffs):
                remainder[shift + i] = spec.sub(remainder[shift + i], spec.mul(c, b))
        return Poly(spec, quotient), Poly(spec, remainder[:d] if d > 0 else ())

    def __floordiv__(self, divisor: "Poly") -> "Poly":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "Poly") -> "Poly":
        return divmod(self, divisor)[1]

    def __call__(self, x: Union[int, FieldElement]) -> FieldElement:
        return FieldElement(self.spec, self.eval(x.value if isinstance(x, FieldElement) else int(x)))

    def eval(self, x: int) -> int:
        """Horner evaluation at a packed value."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.spec.add(self.spec.mul(acc, x), c)
        return acc

    def derivative(self) -> "Poly":
        spec = self.spec
        return Poly(spec, [spec.mul(spec.scalar_value(i), c) for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.spec.inv(self.leading))

    def roots(self) -> List[int]:
        """Distinct roots in GF(q), ascending."""
        if self.is_zero():
            raise ValueError("every element is a root of the zero polynomial")
        return [x for x in range(self.spec.order) if self.eval(x) == 0]

    def __repr__(self) -> str:
        return f"Poly({self.spec}, {list(self.coeffs)})"
