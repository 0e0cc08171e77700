"""The ordered group Z^n under lexicographic order, and its convex subgroups.

Exponents are n-tuples of integers compared lexicographically with the first
coordinate most significant, plus a distinguished INFINITY that absorbs
addition and exceeds every finite exponent.  The convex subgroups of Z^n
(lex) are exactly the suffix blocks

    Delta_j = { e : the first n-j coordinates of e are 0 },    0 <= j <= n,

forming a chain Delta_0 = {0} < Delta_1 < ... < Delta_n = Z^n.  Projection
onto the quotient Z^n / Delta_j drops the last j coordinates and is order
preserving in the induced sense.
"""

from dataclasses import dataclass

from .errors import RankMismatchError

LESS = -1
EQUAL = 0
GREATER = 1


class Exponent:
    """A point of Z^n (lex order), or the absorbing value INFINITY.

    Immutable; finite exponents hash and compare like plain tuples.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        if coords is None:
            self.coords = None
        else:
            self.coords = tuple(int(c) for c in coords)

    @classmethod
    def zero(cls, rank):
        return cls((0,) * rank)

    @property
    def is_infinity(self):
        return self.coords is None

    @property
    def rank(self):
        return None if self.coords is None else len(self.coords)

    def _require_comparable(self, other):
        if not isinstance(other, Exponent):
            raise TypeError(f"cannot compare Exponent with {type(other).__name__}")
        if self.coords is not None and other.coords is not None and len(self.coords) != len(other.coords):
            raise RankMismatchError(f"rank mismatch: {self} vs {other}")

    def compare(self, other):
        """Three-way lexicographic comparison; INFINITY is the maximum."""
        self._require_comparable(other)
        if self.coords is None:
            return EQUAL if other.coords is None else GREATER
        if other.coords is None:
            return LESS
        if self.coords < other.coords:
            return LESS
        if self.coords > other.coords:
            return GREATER
        return EQUAL

    def __eq__(self, other):
        if not isinstance(other, Exponent):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        return self.compare(other) == LESS

    def __le__(self, other):
        return self.compare(other) != GREATER

    def __gt__(self, other):
        return self.compare(other) == GREATER

    def __ge__(self, other):
        return self.compare(other) != LESS

    def __add__(self, other):
        self._require_comparable(other)
        if self.coords is None or other.coords is None:
            return INFINITY
        return Exponent(a + b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        if self.coords is None:
            raise ValueError("INFINITY has no negative")
        return Exponent(-c for c in self.coords)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if self.coords is None:
            return INFINITY
        return Exponent(k * c for c in self.coords)

    __rmul__ = __mul__

    def __str__(self):
        if self.coords is None:
            return "inf"
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return "Exponent.INFINITY" if self.coords is None else f"Exponent({self.coords})"


INFINITY = Exponent(None)


def lex_compare(a, b):
    """Total lexicographic order on same-rank exponents; returns -1, 0 or 1."""
    return a.compare(b)


class ConvexSubgroup:
    """The suffix block Delta_j of Z^n: exponents whose first n-j coordinates vanish."""

    __slots__ = ("rank", "level")

    def __init__(self, rank, level):
        if not 0 <= level <= rank:
            raise ValueError(f"level must satisfy 0 <= j <= {rank}, got {level}")
        self.rank = rank
        self.level = level

    @property
    def head_length(self):
        return self.rank - self.level

    @property
    def is_trivial(self):
        return self.level == 0

    @property
    def is_full(self):
        return self.level == self.rank

    def contains(self, e):
        if e.is_infinity:
            return False
        if e.rank != self.rank:
            raise RankMismatchError(f"rank mismatch: {e} vs rank-{self.rank} subgroup")
        return all(c == 0 for c in e.coords[: self.head_length])

    def __eq__(self, other):
        if not isinstance(other, ConvexSubgroup):
            return NotImplemented
        return self.rank == other.rank and self.level == other.level

    def __hash__(self):
        return hash((self.rank, self.level))

    def __le__(self, other):
        # chain property: Delta_i <= Delta_j iff i <= j
        if self.rank != other.rank:
            raise RankMismatchError("subgroups of different ambient rank")
        return self.level <= other.level

    def __str__(self):
        return f"Delta_{self.level}"

    def __repr__(self):
        return f"ConvexSubgroup(rank={self.rank}, level={self.level})"


def project(e, delta):
    """Image of an exponent in Z^n / Delta_j: drop the last j coordinates.

    Order preserving in the induced sense: a <= b implies project(a) <= project(b).
    INFINITY maps to INFINITY.
    """
    if e.is_infinity:
        return INFINITY
    if e.rank != delta.rank:
        raise RankMismatchError(f"rank mismatch: {e} vs rank-{delta.rank} subgroup")
    return Exponent(e.coords[: delta.head_length])


def delta_component(e, delta):
    """The last j coordinates of a finite exponent: its position inside Delta_j."""
    if e.is_infinity:
        return INFINITY
    if e.rank != delta.rank:
        raise RankMismatchError(f"rank mismatch: {e} vs rank-{delta.rank} subgroup")
    return Exponent(e.coords[delta.head_length :])


def split(e, delta):
    """(head, tail) of a finite exponent: coordinates outside / inside Delta_j."""
    return project(e, delta), delta_component(e, delta)


def lift(coarse, delta):
    """Canonical preimage of a coarse value: append zeros on the Delta_j block."""
    if coarse.is_infinity:
        return INFINITY
    if coarse.rank != delta.head_length:
        raise RankMismatchError(f"coarse value {coarse} does not match {delta} of rank {delta.rank}")
    return Exponent(coarse.coords + (0,) * delta.level)


@dataclass(frozen=True)
class CosetReport:
    """Outcome of a coset-cofinality test at a horizon.

    `cofinal` is the COFINAL-UP-TO-HORIZON verdict; it never claims the
    unbounded statement, only what the finite sample shows below `horizon`.
    """

    cofinal: bool
    alpha: Exponent
    delta: ConvexSubgroup
    horizon: Exponent
    counterexample: Exponent | None
    coset_values: tuple
    reason: str


def coset_cofinal_in(values, alpha, delta, horizon):
    """Test whether the coset alpha + Delta is cofinal in a finite sample of values.

    The sample passes when (a) every value is <= some element of the coset,
    i.e. no value projects above alpha, and (b) the values meeting the coset
    contain the top of the sample, so nothing sampled escapes the coset
    before the horizon.  True cofinality is not decidable from a finite
    sample; the verdict is only ever "up to horizon".

    Raises ValueError on an empty sample or on values at/above the horizon.
    """
    values = list(values)
    if not values:
        raise ValueError("empty sample")
    for g in values:
        if g.is_infinity or not g < horizon:
            raise ValueError(f"sampled value {g} is not strictly below the horizon {horizon}")
    alpha_head = project(alpha, delta)
    coset = []
    top = values[0]
    for g in values:
        if g > top:
            top = g
        head = project(g, delta)
        if head > alpha_head:
            return CosetReport(False, alpha, delta, horizon, g, (), f"value {g} exceeds the coset {alpha}+{delta}")
        if head == alpha_head:
            coset.append(g)
    if not coset:
        return CosetReport(False, alpha, delta, horizon, None, (), "no sampled value meets the coset")
    coset.sort()
    if coset[-1] != top:
        return CosetReport(
            False, alpha, delta, horizon, None, tuple(coset), "coset values do not reach the top of the sample"
        )
    return CosetReport(True, alpha, delta, horizon, None, tuple(coset), "COFINAL-UP-TO-HORIZON")
