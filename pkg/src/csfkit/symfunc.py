"""Exact symmetric-function vectors in the elementary and power-sum bases.

Closed-form expansions arrive in the e-basis and the brute-force graph
oracle produces the p-basis natively, so equality of two expansions is
always decided after mapping both sides to the power-sum basis.  Only the
e -> p direction is implemented; coefficients are exact rationals because
the images of e_n acquire denominators up to n!.
"""

from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, Optional, Tuple

from .compositions import Partition


class Basis(Enum):
    E = "e"
    P = "p"


class BasisVector:
    """A homogeneous symmetric function stored as partition -> coefficient.

    Invariants: every stored partition has modulus equal to the degree, no
    zero coefficients are stored, and coefficients are exact ``Fraction``
    values.  Instances are treated as immutable.
    """

    __slots__ = ("basis", "degree", "terms")

    def __init__(self, basis: Basis, degree: int, terms: Optional[Dict] = None):
        if degree < 0:
            raise ValueError(f"degree must be nonnegative, got {degree}")
        clean: Dict[Partition, Fraction] = {}
        for key, value in (terms or {}).items():
            lam = key if isinstance(key, Partition) else Partition(key)
            if lam.modulus != degree:
                raise ValueError(
                    f"partition {list(lam)} has modulus {lam.modulus}, "
                    f"expected degree {degree}"
                )
            coef = Fraction(value)
            if coef:
                clean[lam] = coef
        self.basis = basis
        self.degree = degree
        self.terms = clean

    def __repr__(self) -> str:
        return f"BasisVector({self.basis.value}, degree={self.degree}, terms={len(self.terms)})"

    def __eq__(self, other) -> bool:
        if isinstance(other, BasisVector):
            return (
                self.basis is other.basis
                and self.degree == other.degree
                and self.terms == other.terms
            )
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam) -> Fraction:
        return self.terms.get(Partition(lam), Fraction(0))

    def items_sorted(self) -> Iterator[Tuple[Partition, Fraction]]:
        """Terms in reverse-lexicographic partition order (deterministic)."""
        for lam in sorted(self.terms, reverse=True):
            yield lam, self.terms[lam]

    def _check_compatible(self, other: "BasisVector") -> None:
        if self.basis is not other.basis:
            raise ValueError(
                f"basis mismatch: {self.basis.value} vs {other.basis.value}"
            )
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def add(self, other: "BasisVector") -> "BasisVector":
        self._check_compatible(other)
        merged = dict(self.terms)
        for lam, coef in other.terms.items():
            merged[lam] = merged.get(lam, Fraction(0)) + coef
        return BasisVector(self.basis, self.degree, merged)

    def scale(self, factor) -> "BasisVector":
        factor = Fraction(factor)
        return BasisVector(
            self.basis,
            self.degree,
            {lam: coef * factor for lam, coef in self.terms.items()},
        )

    def subtract(self, other: "BasisVector") -> "BasisVector":
        return self.add(other.scale(-1))

    def equals(self, other: "BasisVector") -> bool:
        """Exact equality; requires matching basis and degree."""
        self._check_compatible(other)
        return self.terms == other.terms

    def evaluate_ones(self, k: int) -> Fraction:
        """Evaluate at x_1 = ... = x_k = 1 and all other variables 0.

        In the e-basis each e_m contributes C(k, m); in the p-basis each
        p_m contributes k.
        """
        if k < 0:
            raise ValueError(f"variable count must be nonnegative, got {k}")
        total = Fraction(0)
        for lam, coef in self.terms.items():
            if self.basis is Basis.E:
                value = 1
                for part in lam:
                    value *= comb(k, part)
            else:
                value = k ** len(lam)
            total += coef * value
        return total

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis.value,
            "degree": self.degree,
            "terms": [
                {
                    "partition": list(lam),
                    "num": str(coef.numerator),
                    "den": str(coef.denominator),
                }
                for lam, coef in self.items_sorted()
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_json_dict(), **kwargs)

    @classmethod
    def from_json_dict(cls, data: dict) -> "BasisVector":
        basis = Basis(data["basis"])
        terms = {
            Partition(entry["partition"]): Fraction(
                int(entry["num"]), int(entry["den"])
            )
            for entry in data["terms"]
        }
        return cls(basis, int(data["degree"]), terms)

    @classmethod
    def from_json(cls, text: str) -> "BasisVector":
        return cls.from_json_dict(json.loads(text))


@lru_cache(maxsize=None)
def _e_to_p_terms(n: int) -> Dict[tuple, Fraction]:
    """Power-sum image of a single e_n via the classical recursion
    n e_n = sum_{i=1..n} (-1)^(i-1) e_{n-i} p_i.

    Cached per degree; recomputation is idempotent so concurrent readers
    are safe.
    """
    if n == 0:
        return {(): Fraction(1)}
    acc: Dict[tuple, Fraction] = {}
    for i in range(1, n + 1):
        factor = Fraction(1 if i % 2 else -1, n)
        for mu, coef in _e_to_p_terms(n - i).items():
            key = tuple(sorted(mu + (i,), reverse=True))
            acc[key] = acc.get(key, Fraction(0)) + factor * coef
    return {key: coef for key, coef in acc.items() if coef}


def e_partition_to_p(lam) -> BasisVector:
    """Power-sum expansion of e_lambda, the product of the e_part images.

    Products are formed directly in the p-basis, where multiplication is
    just multiset union of the index partitions.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if not lam:
        raise ValueError("empty partition has no basis element")
    terms: Dict[tuple, Fraction] = {(): Fraction(1)}
    for part in lam:
        factors = _e_to_p_terms(part)
        merged: Dict[tuple, Fraction] = {}
        for mu, c1 in terms.items():
            for nu, c2 in factors.items():
                key = tuple(sorted(mu + nu, reverse=True))
                merged[key] = merged.get(key, Fraction(0)) + c1 * c2
        terms = merged
    return BasisVector(
        Basis.P, lam.modulus, {Partition(key): coef for key, coef in terms.items()}
    )


def evector_to_p(vector: BasisVector) -> BasisVector:
    """Linear extension of :func:`e_partition_to_p` to e-basis vectors."""
    if vector.basis is not Basis.E:
        raise ValueError(f"expected an e-basis vector, got basis {vector.basis.value}")
    result = BasisVector(Basis.P, vector.degree)
    for lam, coef in vector.terms.items():
        result = result.add(e_partition_to_p(lam).scale(coef))
    return result


def first_difference(
    v: BasisVector, w: BasisVector
) -> Optional[Tuple[Partition, Fraction, Fraction]]:
    """First partition (reverse-lexicographically) where two vectors differ,
    with both coefficients; None when the vectors are equal."""
    v._check_compatible(w)
    for lam in sorted(set(v.terms) | set(w.terms), reverse=True):
        cv = v.terms.get(lam, Fraction(0))
        cw = w.terms.get(lam, Fraction(0))
        if cv != cw:
            return lam, cv, cw
    return None
