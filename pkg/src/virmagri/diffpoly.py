"""Differential polynomials in one field generator, over the integers.

The algebra is the polynomial ring on commuting generators L, d1L, d2L,
... where dkL stands for the k-th total derivative of L.  A monomial is
stored as a weakly decreasing tuple of derivative orders, so its degree-n
slice is in bijection with the partitions of n via order k <-> part k+1.
Coefficients are Python ints; all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AlgebraCtx:
    """Session configuration: the integer central charge of the bracket.

    The charge must be a genuine int; integer coefficients everywhere
    depend on it.
    """

    central_charge: int = 0

    def __post_init__(self):
        if not isinstance(self.central_charge, int) or isinstance(self.central_charge, bool):
            raise TypeError("central charge must be an integer, got %r" % (self.central_charge,))


def mono(orders) -> tuple[int, ...]:
    """Canonical monomial key for a multiset of derivative orders."""
    ks = tuple(sorted((int(k) for k in orders), reverse=True))
    if ks and ks[-1] < 0:
        raise ValueError("derivative orders must be non-negative, got %d" % ks[-1])
    return ks


def mono_mul(a, b) -> tuple[int, ...]:
    return tuple(sorted(a + b, reverse=True))


def mono_degree(m) -> int:
    """Each factor dkL contributes k + 1; the unit monomial has degree 0."""
    return sum(k + 1 for k in m)


def conformal_weight(m) -> int:
    """Each factor dkL contributes k + 2; the unit monomial has weight 0."""
    return sum(k + 2 for k in m)


class DiffPoly:
    """Sparse integer polynomial in the generators dkL.

    terms maps canonical monomial tuples to nonzero int coefficients.
    Instances are treated as immutable; every operation returns a fresh
    value.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "DiffPoly":
        return cls()

    @classmethod
    def one(cls) -> "DiffPoly":
        return cls({(): 1})

    @classmethod
    def const(cls, c: int) -> "DiffPoly":
        return cls({(): int(c)})

    @classmethod
    def gen(cls, k: int) -> "DiffPoly":
        """The single generator dkL."""
        return cls({mono((k,)): 1})

    @classmethod
    def monomial(cls, orders, coeff: int = 1) -> "DiffPoly":
        return cls({mono(orders): int(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(): other} if other else {})
        return isinstance(other, DiffPoly) and self.terms == other.terms

    def __add__(self, other: "DiffPoly") -> "DiffPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return DiffPoly(out)

    def __sub__(self, other: "DiffPoly") -> "DiffPoly":
        return self + (-other)

    def __neg__(self) -> "DiffPoly":
        return DiffPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return DiffPoly({m: c * other for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = mono_mul(m1, m2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return DiffPoly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int) -> "DiffPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = DiffPoly.one()
        for _ in range(e):
            out = out * self
        return out

    def derive(self) -> "DiffPoly":
        """Total derivative: dkL goes to d(k+1)L, extended by the product rule."""
        out: dict = {}
        for m, c in self.terms.items():
            i = 0
            while i < len(m):
                j = i
                while j < len(m) and m[j] == m[i]:
                    j += 1
                count = j - i
                newm = m[:i] + (m[i] + 1,) + m[i + 1:]
                s = out.get(newm, 0) + c * count
                if s:
                    out[newm] = s
                elif newm in out:
                    del out[newm]
                i = j
        return DiffPoly(out)

    def partial_wrt(self, k: int) -> "DiffPoly":
        """Formal partial derivative with respect to the generator dkL,
        all generators treated as independent variables."""
        out: dict = {}
        for m, c in self.terms.items():
            count = m.count(k)
            if count:
                idx = m.index(k)
                newm = m[:idx] + m[idx + 1:]
                s = out.get(newm, 0) + c * count
                if s:
                    out[newm] = s
                elif newm in out:
                    del out[newm]
        return DiffPoly(out)

    def orders_present(self) -> set[int]:
        """Derivative orders occurring in any monomial."""
        return {k for m in self.terms for k in m}

    def max_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in display order: higher degree first, then lexicographic."""
        return sorted(self.terms.items(), key=lambda kv: (mono_degree(kv[0]), kv[0]), reverse=True)

    def __str__(self):
        from .text import format_diffpoly

        return format_diffpoly(self)

    __repr__ = __str__
