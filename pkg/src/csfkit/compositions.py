"""Compositions, partitions, and nearest-prefix statistics.

Every coefficient formula in this package is indexed by integer compositions
and evaluated through the statistics defined here: the path weight ``w_I``
and the overshoot/undershoot of prefix sums around a threshold.  All values
are immutable and all functions are pure, so sweeps may share them freely
across workers.
"""

from __future__ import annotations

import bisect
from typing import Iterator

# Parts and moduli stay machine-word sized; coefficients elsewhere are
# arbitrary precision.  Enforced at this boundary so bad input fails fast.
MAX_MODULUS = 64


class Partition(tuple):
    """Weakly decreasing positive parts; the index of an e- or p-basis term."""

    def __new__(cls, parts=()) -> "Partition":
        ordered = sorted((int(p) for p in parts), reverse=True)
        if ordered and ordered[-1] < 1:
            raise ValueError("partition parts must be positive integers")
        return super().__new__(cls, ordered)

    @property
    def modulus(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


class Composition:
    """An ordered tuple of positive integer parts.

    The cumulative sums ``(0, i1, i1+i2, ..., n)`` are precomputed once so
    that the sigma/theta statistics are binary searches; coefficient sweeps
    evaluate them many times per composition.

    The empty composition is a legal value (it appears as a prefix or suffix
    of splits) but is never an expansion index: ``weight`` and ``rho`` reject
    it.
    """

    __slots__ = ("parts", "prefix_moduli")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        moduli = [0] * (len(parts) + 1)
        for k, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"composition parts must be positive, got {p}")
            moduli[k + 1] = moduli[k] + p
        if moduli[-1] > MAX_MODULUS:
            raise ValueError(
                f"modulus {moduli[-1]} exceeds the supported bound {MAX_MODULUS}"
            )
        self.parts = parts
        self.prefix_moduli = tuple(moduli)

    @property
    def modulus(self) -> int:
        return self.prefix_moduli[-1]

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Composition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Composition({list(self.parts)})"

    def __str__(self) -> str:
        return format_parts(self.parts)

    def reversed(self) -> "Composition":
        """The composition with the same parts in opposite order."""
        return Composition(self.parts[::-1])

    def rho(self) -> Partition:
        """The partition obtained by sorting the parts decreasingly."""
        if not self.parts:
            raise ValueError("the empty composition has no partition image")
        return Partition(self.parts)

    @property
    def weight(self) -> int:
        """Path weight i1 * (i2 - 1) * ... * (iz - 1).

        Zero exactly when some part after the first equals 1.
        """
        if not self.parts:
            raise ValueError("weight of the empty composition is undefined")
        w = self.parts[0]
        for p in self.parts[1:]:
            w *= p - 1
        return w

    def _check_threshold(self, a: int) -> None:
        if not isinstance(a, int):
            raise ValueError(f"threshold must be an integer, got {a!r}")
        if a < 0 or a > self.modulus:
            raise ValueError(
                f"threshold {a} outside [0, {self.modulus}] for {self}"
            )

    def sigma_plus(self, a: int) -> int:
        """Smallest prefix modulus that is >= a (the empty prefix counts)."""
        self._check_threshold(a)
        return self.prefix_moduli[bisect.bisect_left(self.prefix_moduli, a)]

    def theta_plus(self, a: int) -> int:
        """Overshoot sigma_plus(a) - a; how far prefixes jump past a."""
        return self.sigma_plus(a) - a

    def sigma_minus(self, a: int) -> int:
        """Largest prefix modulus that is <= a."""
        self._check_threshold(a)
        return self.prefix_moduli[bisect.bisect_right(self.prefix_moduli, a) - 1]

    def theta_minus(self, a: int) -> int:
        """Undershoot a - sigma_minus(a)."""
        return a - self.sigma_minus(a)


def format_parts(parts) -> str:
    """Compact display: '722' while all parts are single digits, else '12,2,2'."""
    parts = tuple(parts)
    if not parts:
        return "()"
    if all(p <= 9 for p in parts):
        return "".join(str(p) for p in parts)
    return ",".join(str(p) for p in parts)


def parse_composition(text: str) -> Composition:
    """Parse a comma-separated part list such as '7,2,2'."""
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse composition from {text!r}") from None
    return Composition(parts)


def _composition_tuples(n: int, min_part: int) -> Iterator[tuple]:
    # Depth-first with the smallest head first yields lexicographic order.
    stack = [(n, ())]
    while stack:
        remaining, head = stack.pop()
        pending = []
        for first in range(min_part, remaining + 1):
            rest = remaining - first
            if rest == 0:
                pending.append((0, head + (first,)))
            elif rest >= min_part:
                pending.append((rest, head + (first,)))
        stack.extend(reversed(pending))
        while stack and stack[-1][0] == 0:
            yield stack.pop()[1]


def compositions_of(n: int, min_part: int = 1) -> Iterator[Composition]:
    """Yield every composition of n with all parts >= min_part, each exactly
    once, in lexicographic order of the part lists.

    The stream is generated lazily so full sweeps stay memory-flat.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if min_part < 1:
        raise ValueError(f"min_part must be >= 1, got {min_part}")
    if n > MAX_MODULUS:
        raise ValueError(f"n {n} exceeds the supported bound {MAX_MODULUS}")
    for parts in _composition_tuples(n, min_part):
        yield Composition(parts)


def weight_positive_compositions(n: int) -> Iterator[Composition]:
    """Yield exactly the compositions of n with nonzero path weight.

    These are the compositions whose parts after the first are all >= 2, so
    the stream is Fibonacci-sized rather than 2^(n-1)-sized.  Order is
    lexicographic, matching :func:`compositions_of`.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > MAX_MODULUS:
        raise ValueError(f"n {n} exceeds the supported bound {MAX_MODULUS}")
    for first in range(1, n + 1):
        rest = n - first
        if rest == 0:
            yield Composition((first,))
        elif rest >= 2:
            for tail in _composition_tuples(rest, 2):
                yield Composition((first,) + tail)
