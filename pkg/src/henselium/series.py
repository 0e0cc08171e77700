"""Exact arithmetic with truncated iterated Laurent series.

A series is a finite association {exponent -> nonzero coefficient} together
with a precision exponent: terms at or above the precision are unknown, and
precision INFINITY means the element is exact.  Coefficients live in Q
(arbitrary-precision rationals) or in a prime field GF(p).  The valuation of
a series is the lex-minimal exponent of its support; a series with empty
support and finite precision has unknown valuation, known only to be at or
above the precision bound.

Supports are kept sparse and sorted by lex order, so valuation queries read
the front of the support.  All values are immutable after construction and
all operations are pure.
"""

import functools
from fractions import Fraction

from .errors import (
    FieldMismatchError,
    PrecisionError,
    RankMismatchError,
    ZeroLeadingTermError,
)
from .valuegroup import INFINITY, Exponent


class RationalField:
    """Exact rational coefficients backed by fractions.Fraction."""

    name = "Q"

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def invert(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def format(self, a):
        return str(a)

    def __repr__(self):
        return "RATIONALS"


class PrimeField:
    """The field GF(p) for a word-sized prime p, elements stored as ints in [0, p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        if isinstance(value, str):
            return self.coerce(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def invert(self, a):
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def format(self, a):
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def _is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


RATIONALS = RationalField()


@functools.cache
def prime_field(p):
    return PrimeField(p)


class UnknownValuation:
    """Marker: the element is zero up to its precision, so only v >= bound is known."""

    __slots__ = ("bound",)

    def __init__(self, bound):
        self.bound = bound

    def __eq__(self, other):
        return isinstance(other, UnknownValuation) and other.bound == self.bound

    def __repr__(self):
        return f"UnknownValuation({self.bound})"

    def __str__(self):
        return f">= {self.bound}"


class TruncatedSeries:
    """A truncated Laurent series: sparse support plus a precision bound.

    Invariants: every stored exponent is strictly below the precision, no
    stored coefficient is zero, and the support iterates in lex order.
    """

    __slots__ = ("field", "rank", "support", "precision")

    def __init__(self, field, rank, terms=(), precision=INFINITY):
        if not precision.is_infinity and precision.rank != rank:
            raise RankMismatchError(f"precision {precision} does not have rank {rank}")
        items = terms.items() if isinstance(terms, dict) else terms
        cleaned = {}
        for exp, coeff in items:
            if not isinstance(exp, Exponent):
                exp = Exponent(exp)
            if exp.is_infinity:
                raise ValueError("INFINITY is not a support exponent")
            if exp.rank != rank:
                raise RankMismatchError(f"support exponent {exp} does not have rank {rank}")
            coeff = field.coerce(coeff)
            if field.is_zero(coeff):
                continue
            if exp >= precision:
                continue  # unknown region: the term carries no information
            if exp in cleaned:
                coeff = field.add(cleaned[exp], coeff)
                if field.is_zero(coeff):
                    del cleaned[exp]
                    continue
            cleaned[exp] = coeff
        self.field = field
        self.rank = rank
        self.support = dict(sorted(cleaned.items()))
        self.precision = precision

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field, rank, precision=INFINITY):
        return cls(field, rank, (), precision)

    @classmethod
    def constant(cls, field, rank, value, precision=INFINITY):
        return cls(field, rank, [(Exponent.zero(rank), value)], precision)

    @classmethod
    def one(cls, field, rank):
        return cls.constant(field, rank, 1)

    @classmethod
    def monomial(cls, field, exponent, coeff=1, precision=INFINITY):
        if not isinstance(exponent, Exponent):
            exponent = Exponent(exponent)
        return cls(field, exponent.rank, [(exponent, coeff)], precision)

    # -- basic queries -----------------------------------------------------

    def is_exact(self):
        return self.precision.is_infinity

    def is_exact_zero(self):
        return not self.support and self.is_exact()

    def is_zero_to_precision(self):
        return not self.support

    def support_exponents(self):
        return tuple(self.support.keys())

    def coefficient(self, exponent):
        """Coefficient at an exponent below the precision (zero if absent)."""
        if not isinstance(exponent, Exponent):
            exponent = Exponent(exponent)
        if exponent >= self.precision:
            raise PrecisionError(f"coefficient at {exponent} is beyond the precision {self.precision}")
        return self.support.get(exponent, self.field.zero)

    def valuation(self):
        """Lex-minimal support exponent; UnknownValuation(bound) on empty truncated support."""
        if self.support:
            return next(iter(self.support))
        if self.is_exact():
            return INFINITY
        return UnknownValuation(self.precision)

    def known_valuation(self):
        v = self.valuation()
        if isinstance(v, UnknownValuation):
            raise ZeroLeadingTermError(f"valuation only known to be {v}")
        return v

    def valuation_floor(self):
        """A sound lower bound for the valuation, usable in precision arithmetic."""
        if self.support:
            return next(iter(self.support))
        return self.precision

    def leading(self):
        """(exponent, coefficient) of the lex-least term."""
        if not self.support:
            raise ZeroLeadingTermError("series has empty support")
        exp = next(iter(self.support))
        return exp, self.support[exp]

    def _check_compatible(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.rank != self.rank:
            raise RankMismatchError(f"rank mismatch: {self.rank} vs {other.rank}")
        if other.field != self.field:
            raise FieldMismatchError(f"coefficient field mismatch: {self.field.name} vs {other.field.name}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        self._check_compatible(other)
        precision = min(self.precision, other.precision)
        merged = dict(self.support)
        field = self.field
        for exp, coeff in other.support.items():
            if exp in merged:
                s = field.add(merged[exp], coeff)
                if field.is_zero(s):
                    del merged[exp]
                else:
                    merged[exp] = s
            else:
                merged[exp] = coeff
        return TruncatedSeries(field, self.rank, merged, precision)

    def __neg__(self):
        field = self.field
        return TruncatedSeries(
            field, self.rank, {e: field.neg(c) for e, c in self.support.items()}, self.precision
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_compatible(other)
        # Cauchy product, truncated at min(vx + prec_y, vy + prec_x); an empty
        # support contributes its precision bound in place of its valuation.
        precision = min(self.valuation_floor() + other.precision, other.valuation_floor() + self.precision)
        field = self.field
        acc = {}
        for e1, c1 in self.support.items():
            for e2, c2 in other.support.items():
                e = e1 + e2
                if e >= precision:
                    continue
                prod = field.mul(c1, c2)
                if e in acc:
                    s = field.add(acc[e], prod)
                    if field.is_zero(s):
                        del acc[e]
                    else:
                        acc[e] = s
                else:
                    acc[e] = prod
        return TruncatedSeries(field, self.rank, acc, precision)

    def scale(self, coeff):
        """Multiply by a single coefficient."""
        field = self.field
        coeff = field.coerce(coeff)
        if field.is_zero(coeff):
            return TruncatedSeries.zero(field, self.rank, self.precision)
        return TruncatedSeries(
            field, self.rank, {e: field.mul(c, coeff) for e, c in self.support.items()}, self.precision
        )

    def shift(self, exponent):
        """Multiply by the monomial with the given exponent (exact shift of support)."""
        if not isinstance(exponent, Exponent):
            exponent = Exponent(exponent)
        precision = self.precision + exponent if not self.precision.is_infinity else INFINITY
        return TruncatedSeries(
            self.field, self.rank, {e + exponent: c for e, c in self.support.items()}, precision
        )

    def invert(self, target_precision=INFINITY):
        """Multiplicative inverse y with x*y = 1 modulo terms >= target_precision.

        The leading monomial is factored out and the unit part is expanded as
        a geometric series.  Requires nonempty support.  Raises PrecisionError
        when the target lies beyond the reach of the expansion: powers of the
        unit's tail only grow inside the convex subgroup generated by its
        valuation, so a target outside that block is not attainable.
        """
        if not self.support:
            raise ZeroLeadingTermError("cannot invert a series with empty support")
        lead_exp, lead_coeff = self.leading()
        field = self.field
        inv_lead = field.invert(lead_coeff)
        unit_tail = self.shift(-lead_exp).scale(inv_lead) - TruncatedSeries.one(field, self.rank)
        if unit_tail.is_exact_zero():
            # pure monomial: exact inverse
            result = TruncatedSeries.monomial(field, -lead_exp, inv_lead)
            if not target_precision.is_infinity:
                result = result.with_precision(target_precision)
            return result
        # honest precision of the result: the requested target, degraded by
        # the input's own unknown tail (sensitivity 1/x^2).
        result_prec = target_precision - lead_exp if not target_precision.is_infinity else INFINITY
        if not self.precision.is_infinity:
            result_prec = min(result_prec, self.precision - lead_exp - lead_exp)
        if result_prec.is_infinity:
            raise PrecisionError("exact inverse of a non-monomial series is not finitely supported")
        geom_prec = result_prec + lead_exp  # precision at which the unit inverse is computed
        vu = unit_tail.known_valuation()
        _check_reachable(vu, geom_prec)
        one = TruncatedSeries.one(field, self.rank).with_precision(geom_prec)
        acc = one
        power = one
        neg_tail = (-unit_tail).with_precision(geom_prec)
        while power.support:
            power = power * neg_tail
            power = power.with_precision(geom_prec)
            acc = acc + power
        return acc.shift(-lead_exp).scale(inv_lead).with_precision(result_prec)

    def truncate_at(self, gamma):
        """Exact finite-support series keeping the terms with exponent < gamma."""
        if not isinstance(gamma, Exponent):
            gamma = Exponent(gamma)
        if gamma > self.precision:
            raise PrecisionError(f"truncation point {gamma} is beyond the known precision {self.precision}")
        return TruncatedSeries(self.field, self.rank, {e: c for e, c in self.support.items() if e < gamma})

    def with_precision(self, precision):
        """Restrict to (at most) the given precision bound."""
        precision = min(precision, self.precision)
        if precision == self.precision:
            return self
        return TruncatedSeries(self.field, self.rank, self.support, precision)

    def agrees_with(self, other, bound):
        """Whether self - other has no known term below the bound."""
        diff = self - other
        if diff.precision < bound:
            raise PrecisionError(f"cannot compare at {bound}: difference known only to {diff.precision}")
        return all(e >= bound for e in diff.support)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.field == other.field
            and self.rank == other.rank
            and self.support == other.support
            and self.precision == other.precision
        )

    __hash__ = None

    def __repr__(self):
        terms = " + ".join(f"{self.field.format(c)}*x{e}" for e, c in self.support.items()) or "0"
        suffix = "" if self.is_exact() else f" + O({self.precision})"
        return f"<{terms}{suffix}>"


def _check_reachable(step, target):
    """Whether multiples of a strictly positive step can reach the target (lex)."""
    if target.is_infinity:
        raise PrecisionError("an infinite target is not reachable by finite steps")
    head = 0
    for c in step.coords:
        if c != 0:
            break
        head += 1
    target_head = target.coords[:head]
    if target_head > (0,) * head:
        raise PrecisionError(
            f"target {target} is not reachable: progress per step is {step}, which is "
            f"confined to a smaller convex subgroup"
        )


def expand_rational(numer, denom, target_precision):
    """Series expansion of the rational function numer/denom to the target precision.

    Both arguments must be exact finite-support series (elements of the base
    field); the denominator must have nonempty support.
    """
    if not numer.is_exact() or not denom.is_exact():
        raise PrecisionError("rational expansion expects exact finite-support operands")
    if not denom.support:
        raise ZeroLeadingTermError("rational expansion with zero denominator")
    if numer.is_exact_zero():
        return numer
    inv_target = target_precision - numer.known_valuation() if not target_precision.is_infinity else INFINITY
    return numer * denom.invert(inv_target)
