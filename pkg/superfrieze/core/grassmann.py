"""Supercommutative Laurent polynomials over the rationals

Even generators commute with everything and may carry negative exponents;
odd generators anticommute with each other and square to zero.  Every
value is a SuperScalar, an immutable map from SuperMonomial to a nonzero
Fraction, so equality is a plain dict comparison.
"""

from __future__ import annotations

import enum
import re
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from ..utils.errors import NotInvertible, ParityMismatch


class Parity(enum.IntEnum):
    """Grading of generators and homogeneous elements"""
    EVEN = 0
    ODD = 1
    MIXED = 2

    def __str__(self) -> str:
        return self.name.lower()


_NAME_RE = re.compile(r'^[A-Za-z]+$')


@dataclass(frozen=True)
class GeneratorId:
    """A named free generator such as a1 (even) or b2 (odd)"""

    name: str
    index: Optional[int] = None
    parity: Parity = Parity.EVEN
    sort_key: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"Generator name must be letters only: {self.name!r}")
        if self.parity not in (Parity.EVEN, Parity.ODD):
            raise ValueError("Generator parity must be even or odd")
        key = (int(self.parity), self.name,
               0 if self.index is None else 1,
               0 if self.index is None else self.index)
        object.__setattr__(self, 'sort_key', key)

    def __lt__(self, other: 'GeneratorId') -> bool:
        return self.sort_key < other.sort_key

    @property
    def key(self) -> str:
        """JSON key, e.g. 'a_1' or 'xi'"""
        return self.name if self.index is None else f"{self.name}_{self.index}"

    @classmethod
    def from_key(cls, key: str, parity: Parity) -> 'GeneratorId':
        name, sep, index = key.rpartition('_')
        if sep:
            return cls(name, int(index), parity)
        return cls(key, None, parity)

    def __str__(self) -> str:
        if self.index is None:
            return self.name
        if self.index >= 0:
            return f"{self.name}{self.index}"
        return f"{self.name}_{self.index}"


def even(name: str, index: Optional[int] = None) -> GeneratorId:
    return GeneratorId(name, index, Parity.EVEN)


def odd(name: str, index: Optional[int] = None) -> GeneratorId:
    return GeneratorId(name, index, Parity.ODD)


EvenPart = Tuple[Tuple[GeneratorId, int], ...]
OddPart = Tuple[GeneratorId, ...]


def _merge_even(left: EvenPart, right: EvenPart) -> EvenPart:
    if not left:
        return right
    if not right:
        return left
    exponents: Dict[GeneratorId, int] = dict(left)
    for gen, exp in right:
        total = exponents.get(gen, 0) + exp
        if total:
            exponents[gen] = total
        else:
            exponents.pop(gen, None)
    return tuple(sorted(exponents.items(), key=lambda item: item[0].sort_key))


def _merge_odd(left: OddPart, right: OddPart) -> Tuple[Optional[OddPart], int]:
    """Concatenate two sorted odd words and sort them.

    Returns (None, 0) when a generator repeats; otherwise the sorted word and
    the sign of the sorting permutation.
    """
    if not left:
        return right, 1
    if not right:
        return left, 1
    if not set(left).isdisjoint(right):
        return None, 0
    left_keys = [g.sort_key for g in left]
    inversions = 0
    for g in right:
        inversions += len(left) - bisect_right(left_keys, g.sort_key)
    merged = tuple(sorted(left + right, key=lambda g: g.sort_key))
    return merged, (-1 if inversions % 2 else 1)


@dataclass(frozen=True)
class SuperMonomial:
    """Product of even powers followed by odd generators in canonical order"""

    even: EvenPart = ()
    odd: OddPart = ()

    @property
    def parity(self) -> Parity:
        return Parity(len(self.odd) % 2)

    @property
    def is_one(self) -> bool:
        return not self.even and not self.odd

    def times(self, other: 'SuperMonomial') -> Tuple[Optional['SuperMonomial'], int]:
        odd_word, sign = _merge_odd(self.odd, other.odd)
        if odd_word is None:
            return None, 0
        return SuperMonomial(_merge_even(self.even, other.even), odd_word), sign

    def sort_key(self) -> tuple:
        degree = sum(exp for _, exp in self.even)
        return (len(self.odd), -degree,
                tuple((g.sort_key, -exp) for g, exp in self.even),
                tuple(g.sort_key for g in self.odd))

    def factors(self) -> List[str]:
        out = [str(g) if exp == 1 else f"{g}^{exp}" for g, exp in self.even]
        out.extend(str(g) for g in self.odd)
        return out


ONE_MONOMIAL = SuperMonomial()

Scalarish = Union['SuperScalar', int, Fraction]


class SuperScalar:
    """Immutable element of the supercommutative ring"""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[SuperMonomial, Any]] = None):
        clean: Dict[SuperMonomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[mono] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[SuperMonomial, Fraction]) -> 'SuperScalar':
        # terms already free of zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> Mapping[SuperMonomial, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = constant(other)
        if not isinstance(other, SuperScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the numbers they compare equal to
            if not self._terms:
                self._hash = hash(0)
            elif len(self._terms) == 1 and ONE_MONOMIAL in self._terms:
                self._hash = hash(self._terms[ONE_MONOMIAL])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> 'SuperScalar':
        return SuperScalar._wrap({m: -c for m, c in self._terms.items()})

    def __add__(self, other: Scalarish) -> 'SuperScalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other: Scalarish) -> 'SuperScalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other: Scalarish) -> 'SuperScalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other: Scalarish) -> 'SuperScalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other: Scalarish) -> 'SuperScalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return mul(other, self)

    def __truediv__(self, other: Scalarish) -> 'SuperScalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return divide(self, other)

    def __rtruediv__(self, other: Scalarish) -> 'SuperScalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return divide(other, self)

    def __pow__(self, exponent: int) -> 'SuperScalar':
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else invert(self)
        result = ONE
        for _ in range(abs(exponent)):
            result = mul(result, base)
        return result

    def sorted_terms(self) -> List[Tuple[SuperMonomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        pieces: List[str] = []
        for mono, coeff in self.sorted_terms():
            factors = mono.factors()
            magnitude = abs(coeff)
            if not factors:
                text = str(magnitude)
            elif magnitude == 1:
                text = '*'.join(factors)
            else:
                text = f"{magnitude}*" + '*'.join(factors)
            if not pieces:
                pieces.append(f"-{text}" if coeff < 0 else text)
            else:
                pieces.append(f" - {text}" if coeff < 0 else f" + {text}")
        return ''.join(pieces)

    def __repr__(self) -> str:
        return f"SuperScalar({str(self)!r})"

    def to_dict(self) -> List[Dict[str, Any]]:
        """JSON form: list of {"coeff", "even", "odd"} terms in canonical order"""
        return [
            {
                'coeff': str(coeff),
                'even': {g.key: exp for g, exp in mono.even},
                'odd': [g.key for g in mono.odd],
            }
            for mono, coeff in self.sorted_terms()
        ]

    @classmethod
    def from_dict(cls, data: Iterable[Mapping[str, Any]]) -> 'SuperScalar':
        total = ZERO
        for term in data:
            even_part = tuple(sorted(
                ((GeneratorId.from_key(k, Parity.EVEN), int(e))
                 for k, e in term.get('even', {}).items() if int(e)),
                key=lambda item: item[0].sort_key))
            odd_gens = [GeneratorId.from_key(k, Parity.ODD) for k in term.get('odd', [])]
            piece = SuperScalar._wrap({SuperMonomial(even_part, ()): Fraction(term['coeff'])})
            for g in odd_gens:
                piece = mul(piece, generator(g))
            total = add(total, piece)
        return total

    def to_sympy(self):
        """SymPy expression; odd generators become non-commutative symbols"""
        import sympy
        expr = sympy.Integer(0)
        for mono, coeff in self.sorted_terms():
            term = sympy.Rational(coeff.numerator, coeff.denominator)
            for g, exp in mono.even:
                term = term * sympy.Symbol(str(g)) ** exp
            for g in mono.odd:
                term = term * sympy.Symbol(str(g), commutative=False)
            expr = expr + term
        return expr


def constant(value: Union[int, Fraction]) -> SuperScalar:
    value = Fraction(value)
    if not value:
        return ZERO
    return SuperScalar._wrap({ONE_MONOMIAL: value})


def _coerce(value: Any) -> Optional[SuperScalar]:
    if isinstance(value, SuperScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return constant(value)
    return None


def as_scalar(value: Scalarish) -> SuperScalar:
    """Coerce ints and Fractions; pass SuperScalars through"""
    coerced = _coerce(value)
    if coerced is None:
        raise TypeError(f"Cannot use {type(value).__name__} as a SuperScalar")
    return coerced


ZERO = SuperScalar._wrap({})
ONE = SuperScalar._wrap({ONE_MONOMIAL: Fraction(1)})


def generator(gen: GeneratorId) -> SuperScalar:
    """Degree-one monomial for gen with coefficient 1"""
    if gen.parity == Parity.ODD:
        return SuperScalar._wrap({SuperMonomial((), (gen,)): Fraction(1)})
    return SuperScalar._wrap({SuperMonomial(((gen, 1),), ()): Fraction(1)})


def add(u: SuperScalar, v: SuperScalar) -> SuperScalar:
    if not v._terms:
        return u
    if not u._terms:
        return v
    terms = dict(u._terms)
    for mono, coeff in v._terms.items():
        total = terms.get(mono, 0) + coeff
        if total:
            terms[mono] = total
        else:
            terms.pop(mono, None)
    return SuperScalar._wrap(terms)


def mul(u: SuperScalar, v: SuperScalar) -> SuperScalar:
    if not u._terms or not v._terms:
        return ZERO
    terms: Dict[SuperMonomial, Fraction] = {}
    for m1, c1 in u._terms.items():
        for m2, c2 in v._terms.items():
            product, sign = m1.times(m2)
            if product is None:
                continue
            total = terms.get(product, 0) + sign * c1 * c2
            if total:
                terms[product] = total
            else:
                terms.pop(product, None)
    return SuperScalar._wrap(terms)


def body(u: SuperScalar) -> SuperScalar:
    """Part of u free of odd generators"""
    return SuperScalar._wrap({m: c for m, c in u._terms.items() if not m.odd})


def soul(u: SuperScalar) -> SuperScalar:
    """Nilpotent remainder u - body(u)"""
    return SuperScalar._wrap({m: c for m, c in u._terms.items() if m.odd})


def project_classical(u: SuperScalar) -> SuperScalar:
    """Image of u under the map sending every odd generator to 0"""
    return body(u)


def parity_of(u: SuperScalar) -> Parity:
    """EVEN, ODD or MIXED; zero counts as even"""
    parities = {m.parity for m in u._terms}
    if len(parities) > 1:
        return Parity.MIXED
    return parities.pop() if parities else Parity.EVEN


def has_parity(u: SuperScalar, parity: Parity) -> bool:
    """True if u is homogeneous of the given parity (zero has every parity)"""
    return u.is_zero or parity_of(u) == parity


def require_parity(u: SuperScalar, parity: Parity, what: str = 'value') -> SuperScalar:
    if not has_parity(u, parity):
        raise ParityMismatch(f"{what} must be {parity}, got {parity_of(u)}: {u}")
    return u


def odd_generators_of(u: SuperScalar) -> set:
    return {g for m in u._terms for g in m.odd}


def generators_of(u: SuperScalar) -> set:
    gens = odd_generators_of(u)
    gens.update(g for m in u._terms for g, _ in m.even)
    return gens


def invert(u: SuperScalar) -> SuperScalar:
    """Two-sided inverse of u

    The body must be a single monomial with nonzero coefficient; the soul
    contribution is the terminating geometric series in -body^-1 * soul.

    Raises:
        NotInvertible: if body(u) is zero or has two or more terms
    """
    head = body(u)
    if len(head._terms) != 1:
        raise NotInvertible(f"Body of {u} is not a unit monomial")
    (mono, coeff), = head._terms.items()
    head_inv = SuperScalar._wrap({
        SuperMonomial(tuple((g, -exp) for g, exp in mono.even), ()): 1 / coeff
    })
    tail = soul(u)
    if tail.is_zero:
        return head_inv

    step = -mul(head_inv, tail)
    total = ONE
    power = ONE
    for _ in range(len(odd_generators_of(u)) + 1):
        power = mul(power, step)
        if power.is_zero:
            break
        total = add(total, power)
    return mul(head_inv, total)


def divide(u: SuperScalar, v: SuperScalar) -> SuperScalar:
    """u * invert(v)"""
    return mul(u, invert(v))


def substitute(u: SuperScalar, assignment: Mapping[GeneratorId, Scalarish]) -> SuperScalar:
    """Ring homomorphism extending assignment; other generators are fixed

    Raises:
        ParityMismatch: if a value's parity differs from its generator's
    """
    values: Dict[GeneratorId, SuperScalar] = {}
    for gen, value in assignment.items():
        value = as_scalar(value)
        require_parity(value, gen.parity, f"value for {gen}")
        values[gen] = value

    powers: Dict[Tuple[GeneratorId, int], SuperScalar] = {}

    def even_power(gen: GeneratorId, exp: int) -> SuperScalar:
        cached = powers.get((gen, exp))
        if cached is None:
            cached = values[gen] ** exp
            powers[(gen, exp)] = cached
        return cached

    total = ZERO
    for mono, coeff in u._terms.items():
        kept_even = []
        factor = constant(coeff)
        for gen, exp in mono.even:
            if gen in values:
                factor = mul(factor, even_power(gen, exp))
            else:
                kept_even.append((gen, exp))
        if kept_even:
            factor = mul(factor, SuperScalar._wrap({SuperMonomial(tuple(kept_even), ()): Fraction(1)}))
        for gen in mono.odd:
            factor = mul(factor, values[gen] if gen in values else generator(gen))
            if factor.is_zero:
                break
        total = add(total, factor)
    return total


def total_sum(values: Iterable[SuperScalar]) -> SuperScalar:
    result = ZERO
    for value in values:
        result = add(result, value)
    return result


def product(values: Iterable[SuperScalar]) -> SuperScalar:
    """Ordered product, left to right"""
    result = ONE
    for value in values:
        result = mul(result, value)
    return result
