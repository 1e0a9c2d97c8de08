"""
Exact arithmetic kernel.

Rationals are ``fractions.Fraction``. A ``LaurentPoly`` is a sparse map from
monomials to nonzero rationals, where a monomial is a sorted tuple of
``(VarId, exponent)`` pairs with nonzero (possibly negative) exponents. A
``ZPoly`` is a dense univariate polynomial in ``z`` whose coefficients are
``LaurentPoly`` values. All values are immutable.
"""
import logging
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple, Union

from core.errors import BchlabError

logger = logging.getLogger(__name__)


class DivisionByZero(BchlabError, ZeroDivisionError):
    """Custom exception for division by an exact zero"""
    pass


class NotDivisible(BchlabError):
    """Custom exception for a failed exact division in the Laurent ring"""
    pass


class SubstitutionError(BchlabError):
    """Custom exception for ring maps that cannot be applied exactly"""
    pass


class Family(IntEnum):
    T = 0
    Q = 1
    C = 2
    S = 3


class VarId(NamedTuple):
    family: Family
    index: int

    def __str__(self) -> str:
        return f"{self.family.name.lower()}{self.index}"


def t(k: int) -> VarId:
    return VarId(Family.T, k)


def q(k: int) -> VarId:
    return VarId(Family.Q, k)


def c(k: int) -> VarId:
    return VarId(Family.C, k)


def s(k: int = 1) -> VarId:
    return VarId(Family.S, k)


Monomial = Tuple[Tuple[VarId, int], ...]
Scalar = Union[int, Fraction]


def rat(value: Union[int, str, Fraction], denominator: int = 1) -> Fraction:
    """Build a normalized rational; a zero denominator raises DivisionByZero."""
    try:
        return Fraction(value, denominator) if denominator != 1 else Fraction(value)
    except ZeroDivisionError as e:
        raise DivisionByZero(str(e)) from e


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZero(f"{a} / 0")
        return a / b
    raise ValueError(f"Unknown rational operation: {op}")


@lru_cache(maxsize=1 << 18)
def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for v, e in b:
        total = merged.get(v, 0) + e
        if total:
            merged[v] = total
        else:
            del merged[v]
    return tuple(sorted(merged.items()))


def _mono_pow(a: Monomial, k: int) -> Monomial:
    return tuple((v, e * k) for v, e in a) if k else ()


def _mono_inv(a: Monomial) -> Monomial:
    return tuple((v, -e) for v, e in a)


def _mono_degree(a: Monomial) -> int:
    return sum(e for _, e in a)


def var_weight(v: VarId) -> int:
    """Weight grading: w(t_k) = k, w(q_k) = w(c_k) = k(k+1)/2, the lifting variable has weight 0."""
    if v.family == Family.T:
        return v.index
    if v.family in (Family.Q, Family.C):
        return v.index * (v.index + 1) // 2
    return 0


def monomial_weight(a: Monomial) -> int:
    return sum(e * var_weight(v) for v, e in a)


def _term_key(item: Tuple[Monomial, Fraction]):
    mono = item[0]
    return (_mono_degree(mono), mono)


class LaurentPoly:
    """Multivariate Laurent polynomial over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, coef in terms.items():
                if coef:
                    key = tuple(sorted((v, e) for v, e in mono if e))
                    clean[key] = clean.get(key, Fraction(0)) + Fraction(coef)
            clean = {m: cf for m, cf in clean.items() if cf}
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, Fraction]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPoly":
        value = Fraction(value)
        return cls._wrap({(): value} if value else {})

    @classmethod
    def var(cls, v: VarId, exponent: int = 1) -> "LaurentPoly":
        return cls._wrap({((v, exponent),) if exponent else (): Fraction(1)})

    @classmethod
    def monomial(cls, mono: Monomial, coef: Scalar = 1) -> "LaurentPoly":
        return cls({mono: coef})

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises ValueError otherwise."""
        if not self.is_constant():
            raise ValueError(f"Not a constant: {self}")
        return self._terms.get((), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        return all(e >= 0 for mono in self._terms for _, e in mono)

    def is_integral(self, inverted: Iterable[VarId] = ()) -> bool:
        """Integer coefficients, with negative exponents allowed only on ``inverted``."""
        allowed = set(inverted)
        for mono, coef in self._terms.items():
            if coef.denominator != 1:
                return False
            if any(e < 0 and v not in allowed for v, e in mono):
                return False
        return True

    def variables(self) -> List[VarId]:
        return sorted({v for mono in self._terms for v, _ in mono})

    def min_exponent(self, v: VarId) -> int:
        return min((dict(mono).get(v, 0) for mono in self._terms), default=0)

    def degree_in(self, v: VarId) -> int:
        return max((dict(mono).get(v, 0) for mono in self._terms), default=0)

    def coefficient_of(self, v: VarId, exponent: int) -> "LaurentPoly":
        """Collect the terms carrying v^exponent, with that factor removed."""
        out: Dict[Monomial, Fraction] = {}
        for mono, coef in self._terms.items():
            d = dict(mono)
            if d.get(v, 0) == exponent:
                d.pop(v, None)
                out[tuple(sorted(d.items()))] = coef
        return LaurentPoly._wrap(out)

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=_term_key)

    def weights(self) -> List[int]:
        return sorted({monomial_weight(m) for m in self._terms})

    def weight_component(self, w: int) -> "LaurentPoly":
        return LaurentPoly._wrap({m: cf for m, cf in self._terms.items() if monomial_weight(m) == w})

    def families(self) -> List[Family]:
        return sorted({v.family for mono in self._terms for v, _ in mono})

    # -- arithmetic -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({m: -cf for m, cf in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        other = as_laurent(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for m, cf in other._terms.items():
            total = out.get(m, 0) + cf
            if total:
                out[m] = total
            else:
                out.pop(m, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = as_laurent(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = as_laurent(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor: Scalar) -> "LaurentPoly":
        if not factor:
            return LAURENT_ZERO
        if factor == 1:
            return self
        factor = Fraction(factor)
        return LaurentPoly._wrap({m: cf * factor for m, cf in self._terms.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return LAURENT_ZERO
        out: Dict[Monomial, Fraction] = {}
        _mul_into(out, self, other)
        return LaurentPoly._wrap({m: cf for m, cf in out.items() if cf})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible(f"Negative power of a non-monomial: ({self})^{k}")
            (mono, coef), = self._terms.items()
            return LaurentPoly._wrap({_mono_pow(mono, k): coef ** k})
        if self.is_monomial():
            (mono, coef), = self._terms.items()
            return LaurentPoly._wrap({_mono_pow(mono, k): coef ** k})
        result = LAURENT_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        return lau_exact_div(self, other)

    def __truediv__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero(f"({self}) / 0")
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, LaurentPoly):
            return lau_exact_div(self, other)
        return NotImplemented

    def substitute(self, mapping: Mapping[VarId, object]) -> "LaurentPoly":
        return lau_substitute(self, mapping)

    def evaluate(self, values: Mapping[VarId, Scalar]) -> "LaurentPoly":
        """Exact (partial) evaluation at rational values."""
        out: Dict[Monomial, Fraction] = {}
        for mono, coef in self._terms.items():
            rest = []
            for v, e in mono:
                if v in values:
                    value = Fraction(values[v])
                    if value == 0 and e < 0:
                        raise DivisionByZero(f"{v} = 0 in a term with {v}^{e}")
                    coef = coef * value ** e
                else:
                    rest.append((v, e))
            if coef:
                key = tuple(rest)
                total = out.get(key, 0) + coef
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
        return LaurentPoly._wrap(out)

    def to_rational(self, values: Optional[Mapping[VarId, Scalar]] = None) -> Fraction:
        return (self.evaluate(values) if values else self).constant_value()

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return _join_terms(_render_term(coef, _mono_factors(mono)) for mono, coef in self.sorted_terms())

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _mul_into(out: Dict[Monomial, Fraction], a: LaurentPoly, b: LaurentPoly) -> None:
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            m = _mono_mul(m1, m2)
            prod = c1 * c2
            prev = out.get(m)
            out[m] = prod if prev is None else prev + prod


def _add_into(out: Dict[Monomial, Fraction], a: LaurentPoly, factor: Fraction = Fraction(1)) -> None:
    for m, cf in a._terms.items():
        prev = out.get(m)
        val = cf * factor
        out[m] = val if prev is None else prev + val


def _clean(out: Dict[Monomial, Fraction]) -> LaurentPoly:
    return LaurentPoly._wrap({m: cf for m, cf in out.items() if cf})


LAURENT_ZERO = LaurentPoly._wrap({})
LAURENT_ONE = LaurentPoly._wrap({(): Fraction(1)})


def as_laurent(value) -> Optional[LaurentPoly]:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.constant(value)
    return None


def _mono_factors(mono: Monomial) -> List[str]:
    return [str(v) if e == 1 else f"{v}^{e}" for v, e in mono]


def _render_term(coef: Fraction, factors: List[str]) -> str:
    if not factors:
        return str(coef)
    body = "*".join(factors)
    if coef == 1:
        return body
    if coef == -1:
        return "-" + body
    return f"{coef}*{body}"


def _join_terms(rendered: Iterable[str]) -> str:
    out = ""
    for i, term in enumerate(rendered):
        if i == 0:
            out = term
        elif term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out or "0"


def lau_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"Unknown Laurent operation: {op}")


def _split_content(a: LaurentPoly) -> Tuple[Monomial, LaurentPoly]:
    """Write a = x^content * a0 with a0 a polynomial that no variable divides."""
    mins: Dict[VarId, int] = {}
    first = True
    for mono in a._terms:
        d = dict(mono)
        if first:
            mins = dict(d)
            first = False
            continue
        for v in list(mins):
            mins[v] = min(mins[v], d.get(v, 0))
        for v, e in d.items():
            if v not in mins:
                mins[v] = min(0, e)
    content = tuple(sorted((v, e) for v, e in mins.items() if e))
    if not content:
        return (), a
    inv = _mono_inv(content)
    return content, LaurentPoly._wrap({_mono_mul(m, inv): cf for m, cf in a._terms.items()})


def lau_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """
    Exact quotient a / b in the Laurent ring.

    Monomial content is stripped from both sides; the remaining polynomial
    division runs in lex order over the union of variables. With a single
    divisor the remainder is zero exactly when b divides a.
    """
    if isinstance(b, (int, Fraction)):
        b = LaurentPoly.constant(b)
    if not b:
        raise DivisionByZero(f"({a}) / 0")
    if not a:
        return LAURENT_ZERO
    if b.is_monomial():
        (mono, coef), = b._terms.items()
        inv = _mono_inv(mono)
        factor = 1 / coef
        return LaurentPoly._wrap({_mono_mul(m, inv): cf * factor for m, cf in a._terms.items()})

    a_content, a0 = _split_content(a)
    b_content, b0 = _split_content(b)
    names = sorted(set(a0.variables()) | set(b0.variables()))
    pos = {v: i for i, v in enumerate(names)}

    def dense(mono: Monomial) -> Tuple[int, ...]:
        vec = [0] * len(names)
        for v, e in mono:
            vec[pos[v]] = e
        return tuple(vec)

    divisor = {dense(m): cf for m, cf in b0._terms.items()}
    lead_b = max(divisor)
    lead_cf = divisor[lead_b]
    rem = {dense(m): cf for m, cf in a0._terms.items()}
    quot: Dict[Tuple[int, ...], Fraction] = {}
    while rem:
        lead = max(rem)
        diff = tuple(x - y for x, y in zip(lead, lead_b))
        if any(d < 0 for d in diff):
            raise NotDivisible(f"({a}) is not divisible by ({b})")
        factor = rem[lead] / lead_cf
        quot[diff] = factor
        for mono, cf in divisor.items():
            key = tuple(x + y for x, y in zip(mono, diff))
            val = rem.get(key, 0) - factor * cf
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)

    shift = _mono_mul(a_content, _mono_inv(b_content))
    out: Dict[Monomial, Fraction] = {}
    for vec, cf in quot.items():
        mono = tuple((names[i], e) for i, e in enumerate(vec) if e)
        out[_mono_mul(mono, shift)] = cf
    return LaurentPoly._wrap(out)


def lau_substitute(a: LaurentPoly, mapping: Mapping[VarId, object]) -> LaurentPoly:
    """
    Apply the ring map v -> mapping[v] (unmapped variables are fixed).

    Negative powers of monomial images are inverted directly. Negative powers
    of any other image are cleared first: the numerator is built with the
    exponents raised to zero, then divided exactly by the product of image
    powers. NotDivisible propagates when that division fails.
    """
    images: Dict[VarId, LaurentPoly] = {}
    for v, img in mapping.items():
        img = as_laurent(img)
        if img is None:
            raise SubstitutionError(f"Unsupported image for {v}: {mapping[v]!r}")
        images[v] = img

    cleared: Dict[VarId, int] = {}
    for v, img in images.items():
        if img.is_monomial():
            continue
        low = a.min_exponent(v)
        if low < 0:
            if not img:
                raise NotDivisible(f"{v} maps to 0 but occurs with exponent {low}")
            cleared[v] = -low

    powers: Dict[Tuple[VarId, int], LaurentPoly] = {}

    def power(v: VarId, e: int) -> LaurentPoly:
        key = (v, e)
        if key not in powers:
            powers[key] = images[v] ** e
        return powers[key]

    out: Dict[Monomial, Fraction] = {}
    for mono, coef in a._terms.items():
        kept: List[Tuple[VarId, int]] = []
        factors: List[LaurentPoly] = []
        for v, e in mono:
            if v in images:
                e += cleared.get(v, 0)
                if e:
                    factors.append(power(v, e))
            else:
                kept.append((v, e))
        for v, extra in cleared.items():
            if v not in dict(mono):
                factors.append(power(v, extra))
        term = LaurentPoly._wrap({tuple(kept): coef})
        for f in factors:
            term = term * f
            if not term:
                break
        _add_into(out, term)
    numerator = _clean(out)
    if not cleared:
        return numerator
    denominator = LAURENT_ONE
    for v, extra in cleared.items():
        denominator = denominator * power(v, extra)
    logger.debug(f"Clearing denominators for {sorted(cleared)} before exact division")
    return lau_exact_div(numerator, denominator)


ZERO_DEGREE = float("-inf")


class ZPoly:
    """Univariate polynomial in z with LaurentPoly coefficients."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable[object] = ()):
        items = []
        for cf in coeffs:
            lp = as_laurent(cf)
            if lp is None:
                raise TypeError(f"Unsupported ZPoly coefficient: {cf!r}")
            items.append(lp)
        while items and not items[-1]:
            items.pop()
        self._coeffs: Tuple[LaurentPoly, ...] = tuple(items)
        self._hash = None

    @classmethod
    def _wrap(cls, coeffs: List[LaurentPoly]) -> "ZPoly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj._coeffs = tuple(coeffs)
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "ZPoly":
        return cls._wrap([])

    @classmethod
    def one(cls) -> "ZPoly":
        return cls._wrap([LAURENT_ONE])

    @classmethod
    def z(cls) -> "ZPoly":
        return cls._wrap([LAURENT_ZERO, LAURENT_ONE])

    @classmethod
    def constant(cls, value) -> "ZPoly":
        return cls([value])

    @classmethod
    def monomial(cls, k: int, coef=1) -> "ZPoly":
        return cls([0] * k + [coef])

    @property
    def coeffs(self) -> Tuple[LaurentPoly, ...]:
        return self._coeffs

    @property
    def degree(self) -> Union[int, float]:
        return len(self._coeffs) - 1 if self._coeffs else ZERO_DEGREE

    def coeff(self, i: int) -> LaurentPoly:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else LAURENT_ZERO

    def leading_coefficient(self) -> LaurentPoly:
        return self._coeffs[-1] if self._coeffs else LAURENT_ZERO

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, ZPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self == ZPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._coeffs)
        return self._hash

    def __neg__(self) -> "ZPoly":
        return ZPoly._wrap([-cf for cf in self._coeffs])

    def __add__(self, other) -> "ZPoly":
        other = as_zpoly(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        n = max(len(a), len(b))
        return ZPoly._wrap([(a[i] if i < len(a) else LAURENT_ZERO) + (b[i] if i < len(b) else LAURENT_ZERO)
                            for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> "ZPoly":
        other = as_zpoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ZPoly":
        other = as_zpoly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor) -> "ZPoly":
        """Multiply by a z-free factor (rational or LaurentPoly)."""
        if isinstance(factor, (int, Fraction)):
            return ZPoly._wrap([cf.scale(factor) for cf in self._coeffs])
        return ZPoly._wrap([cf * factor for cf in self._coeffs])

    def __mul__(self, other) -> "ZPoly":
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, ZPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return ZPOLY_ZERO
        acc: List[Dict[Monomial, Fraction]] = [{} for _ in range(len(self._coeffs) + len(other._coeffs) - 1)]
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                if b:
                    _mul_into(acc[i + j], a, b)
        return ZPoly._wrap([_clean(d) for d in acc])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ZPoly":
        if k < 0:
            raise ValueError("ZPoly powers must be non-negative")
        result = ZPOLY_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, divisor) -> "ZPoly":
        """Coefficientwise exact division by a z-free divisor."""
        divisor = as_laurent(divisor)
        if divisor is None:
            raise TypeError("ZPoly division needs a z-free divisor")
        return ZPoly._wrap([lau_exact_div(cf, divisor) for cf in self._coeffs])

    def shift(self, h: Scalar) -> "ZPoly":
        """P(z + h) by binomial expansion."""
        if not h or len(self._coeffs) < 2:
            return self
        h = Fraction(h)
        acc: List[Dict[Monomial, Fraction]] = [{} for _ in self._coeffs]
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j in range(i + 1):
                _add_into(acc[j], a, comb(i, j) * h ** (i - j))
        return ZPoly._wrap([_clean(d) for d in acc])

    def delta(self) -> "ZPoly":
        return self.shift(1) - self

    def derive(self) -> "ZPoly":
        return ZPoly._wrap([cf.scale(i) for i, cf in enumerate(self._coeffs)][1:])

    def evaluate(self, z0) -> LaurentPoly:
        """Horner evaluation at a rational or LaurentPoly point."""
        result = LAURENT_ZERO
        for cf in reversed(self._coeffs):
            result = result * z0 + cf
        return result

    def map_coeffs(self, fn) -> "ZPoly":
        return ZPoly._wrap([fn(cf) for cf in self._coeffs])

    def substitute(self, mapping: Mapping[VarId, object]) -> "ZPoly":
        return self.map_coeffs(lambda cf: lau_substitute(cf, mapping))

    def evaluate_vars(self, values: Mapping[VarId, Scalar]) -> "ZPoly":
        return self.map_coeffs(lambda cf: cf.evaluate(values))

    def weights(self) -> List[int]:
        return sorted({i + monomial_weight(m) for i, cf in enumerate(self._coeffs) for m in cf.terms})

    def weight_component(self, w: int) -> "ZPoly":
        return ZPoly._wrap([cf.weight_component(w - i) for i, cf in enumerate(self._coeffs)])

    def is_integral(self, inverted: Iterable[VarId] = ()) -> bool:
        inverted = list(inverted)
        return all(cf.is_integral(inverted) for cf in self._coeffs)

    def variables(self) -> List[VarId]:
        return sorted({v for cf in self._coeffs for v in cf.variables()})

    def families(self) -> List[Family]:
        return sorted({f for cf in self._coeffs for f in cf.families()})

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        rendered = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            zpart = [] if i == 0 else (["z"] if i == 1 else [f"z^{i}"])
            for mono, coef in self._coeffs[i].sorted_terms():
                rendered.append(_render_term(coef, _mono_factors(mono) + zpart))
        return _join_terms(rendered)

    def __repr__(self) -> str:
        return f"ZPoly({self})"


ZPOLY_ZERO = ZPoly._wrap([])
ZPOLY_ONE = ZPoly._wrap([LAURENT_ONE])


def as_zpoly(value) -> Optional[ZPoly]:
    if isinstance(value, ZPoly):
        return value
    lp = as_laurent(value)
    return ZPoly._wrap([lp]) if lp is not None else None


def zp_shift(p: ZPoly, h: Scalar) -> ZPoly:
    return p.shift(h)


def zp_delta(p: ZPoly) -> ZPoly:
    return p.delta()


def zp_derive(p: ZPoly) -> ZPoly:
    return p.derive()


def zp_evaluate(p: ZPoly, z0) -> LaurentPoly:
    return p.evaluate(z0)


def weight_component(a: Union[LaurentPoly, ZPoly], w: int) -> Union[LaurentPoly, ZPoly]:
    """Terms of total weight exactly w (z has weight 1); input must use one coordinate family."""
    if len(a.families()) > 1:
        raise ValueError(f"Weight grading needs a single coordinate family, got {a.families()}")
    return a.weight_component(w)


def weight_of(a: Union[LaurentPoly, ZPoly]) -> int:
    """Weight of a weight-homogeneous value; raises ValueError when mixed."""
    ws = a.weights()
    if len(ws) != 1:
        raise ValueError(f"Not weight-homogeneous: weights {ws}")
    return ws[0]
