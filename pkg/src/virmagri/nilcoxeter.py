"""Grothendieck groups of the nil-Coxeter tower, the Weyl algebra, and the
operator realization of differential monomials.

K0 carries the basis [N_n] (projective classes) and G0 the basis [L_n]
(simple classes); induction and restriction act as x and d/dx under the
polynomial realization phi_n.  Weyl elements are kept in normal order,
all x powers to the left of all derivative powers, with products
renormalized through the relation D x = x D + 1.
"""

from __future__ import annotations

from math import comb, factorial

from .diffpoly import AlgebraCtx, DiffPoly
from .errors import DomainError
from .k0sigma import K0SigmaElem


def _falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


class _IntBasisElem:
    """Integer combination over a basis indexed by non-negative integers."""

    __slots__ = ("terms",)
    label = "?"

    def __init__(self, terms=None):
        self.terms = {int(n): c for n, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis(cls, n: int):
        if n < 0:
            raise ValueError("basis index must be non-negative, got %d" % n)
        return cls({n: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return type(other) is type(self) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for n, c in other.terms.items():
            s = out.get(n, 0) + c
            if s:
                out[n] = s
            elif n in out:
                del out[n]
        return type(self)(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)({n: -c for n, c in self.terms.items()})

    def scale(self, k: int):
        return type(self)({n: c * k for n, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        from .text import format_kn

        return format_kn(self)

    __repr__ = __str__


class K0NElem(_IntBasisElem):
    """Combination of projective classes [N_n]; [N_0] is the product unit."""

    label = "N"

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict = {}
        for n, c in self.terms.items():
            for m, d in other.terms.items():
                s = out.get(n + m, 0) + c * d
                if s:
                    out[n + m] = s
                elif n + m in out:
                    del out[n + m]
        return K0NElem(out)

    __rmul__ = __mul__


class G0NElem(_IntBasisElem):
    """Combination of simple classes [L_n]; products pick up binomial
    structure constants, keeping everything integral."""

    label = "L"

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict = {}
        for n, c in self.terms.items():
            for m, d in other.terms.items():
                s = out.get(n + m, 0) + c * d * comb(n + m, n)
                if s:
                    out[n + m] = s
                elif n + m in out:
                    del out[n + m]
        return G0NElem(out)

    __rmul__ = __mul__


def ind_k0n(e: K0NElem) -> K0NElem:
    """[N_n] -> [N_(n+1)], extended linearly."""
    return K0NElem({n + 1: c for n, c in e.terms.items()})


def res_k0n(e: K0NElem) -> K0NElem:
    """[N_n] -> n*[N_(n-1)], extended linearly; kills [N_0]."""
    return K0NElem({n - 1: c * n for n, c in e.terms.items() if n > 0})


def ind_g0n(e: G0NElem) -> G0NElem:
    """[L_n] -> (n+1)*[L_(n+1)], extended linearly."""
    return G0NElem({n + 1: c * (n + 1) for n, c in e.terms.items()})


def res_g0n(e: G0NElem) -> G0NElem:
    """[L_n] -> [L_(n-1)], extended linearly; kills [L_0]."""
    return G0NElem({n - 1: c for n, c in e.terms.items() if n > 0})


class XPoly:
    """Sparse integer polynomial in one variable x."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {int(n): c for n, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "XPoly":
        return cls()

    @classmethod
    def one(cls) -> "XPoly":
        return cls({0: 1})

    @classmethod
    def x(cls) -> "XPoly":
        return cls({1: 1})

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "XPoly":
        return cls({n: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return isinstance(other, XPoly) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for n, c in other.terms.items():
            s = out.get(n, 0) + c
            if s:
                out[n] = s
            elif n in out:
                del out[n]
        return XPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return XPoly({n: -c for n, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return XPoly({n: c * other for n, c in self.terms.items()})
        out: dict = {}
        for n, c in self.terms.items():
            for m, d in other.terms.items():
                s = out.get(n + m, 0) + c * d
                if s:
                    out[n + m] = s
                elif n + m in out:
                    del out[n + m]
        return XPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> "XPoly":
        return XPoly({n - 1: c * n for n, c in self.terms.items() if n > 0})

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        from .text import format_xpoly

        return format_xpoly(self)

    __repr__ = __str__


def phi_n(e: K0NElem) -> XPoly:
    """The polynomial realization [N_n] -> x^n."""
    return XPoly(dict(e.terms))


def phi_n_inv(p: XPoly) -> K0NElem:
    return K0NElem(dict(p.terms))


class WeylElem:
    """Normally ordered integer combination of x^a D^b."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {(a, b): c for (a, b), c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "WeylElem":
        return cls()

    @classmethod
    def one(cls) -> "WeylElem":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> "WeylElem":
        if a < 0 or b < 0:
            raise ValueError("negative exponent in a Weyl monomial")
        return cls({(a, b): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, WeylElem) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return WeylElem(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return WeylElem({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        """Product with renormalization: every D walking past an x leaves
        a lower-order correction term behind."""
        if isinstance(other, int):
            return WeylElem({k: c * other for k, c in self.terms.items()})
        out: dict = {}
        for (a, b), c1 in self.terms.items():
            for (e, f), c2 in other.terms.items():
                for k in range(min(b, e) + 1):
                    key = (a + e - k, b + f - k)
                    s = out.get(key, 0) + c1 * c2 * comb(b, k) * _falling(e, k)
                    if s:
                        out[key] = s
                    elif key in out:
                        del out[key]
        return WeylElem(out)

    __rmul__ = __mul__

    def apply(self, p: XPoly) -> XPoly:
        """Act on a polynomial: x multiplies, D differentiates."""
        out: dict = {}
        for (a, b), c in self.terms.items():
            for n, cn in p.terms.items():
                if b <= n:
                    key = n - b + a
                    s = out.get(key, 0) + c * cn * _falling(n, b)
                    if s:
                        out[key] = s
                    elif key in out:
                        del out[key]
        return XPoly(out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0]), reverse=True)

    def __str__(self):
        from .text import format_weyl

        return format_weyl(self)

    __repr__ = __str__


class IndResExpr:
    """Integer combination of formal words in the letters Ind and Res.

    Words are tuples over {'I', 'R'}, leftmost letter acting last; the
    substitution Ind -> x, Res -> D lands in the Weyl algebra.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {tuple(w): c for w, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "IndResExpr":
        return cls()

    @classmethod
    def word(cls, letters, coeff: int = 1) -> "IndResExpr":
        w = tuple(letters)
        if any(ch not in ("I", "R") for ch in w):
            raise ValueError("word letters must be 'I' or 'R'")
        return cls({w: coeff})

    @classmethod
    def identity(cls) -> "IndResExpr":
        return cls({(): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, IndResExpr) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return IndResExpr(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return IndResExpr({w: c * other for w, c in self.terms.items()})
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                key = w1 + w2
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return IndResExpr(out)

    __rmul__ = __mul__

    def to_weyl(self) -> WeylElem:
        """Substitute x for Ind and D for Res, normalizing the product."""
        out = WeylElem.zero()
        for w, c in self.terms.items():
            prod = WeylElem.one()
            for ch in w:
                prod = prod * (WeylElem.monomial(1, 0) if ch == "I" else WeylElem.monomial(0, 1))
            out = out + prod * c
        return out

    def act_k0n(self, e: K0NElem) -> K0NElem:
        """Run the word as an operator on a projective-class combination,
        rightmost letter first."""
        out = K0NElem.zero()
        for w, c in self.terms.items():
            cur = e
            for ch in reversed(w):
                cur = ind_k0n(cur) if ch == "I" else res_k0n(cur)
            out = out + cur.scale(c)
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]), reverse=True):
            word = "".join("Ind" if ch == "I" else "Res" for ch in w) or "Id"
            bits.append(word if c == 1 else "%d*%s" % (c, word))
        return " + ".join(bits)


def _require_zero_charge(ctx: AlgebraCtx, what: str) -> None:
    if ctx.central_charge != 0:
        raise DomainError(
            "%s is defined at central charge 0, got %d" % (what, ctx.central_charge))


def psi2(f: DiffPoly, ctx: AlgebraCtx) -> WeylElem:
    """Quantize a differential polynomial: each factor of order j becomes
    j! * x^(j+3) D, multiplied out left to right in decreasing order."""
    _require_zero_charge(ctx, "quantization")
    out = WeylElem.zero()
    for m, c in f.terms.items():
        prod = WeylElem.one()
        scal = c
        for j in m:
            scal *= factorial(j)
            prod = prod * WeylElem.monomial(j + 3, 1)
        out = out + prod * scal
    return out


def psi1(e: K0SigmaElem, ctx: AlgebraCtx) -> IndResExpr:
    """Quantize a class combination as a formal Ind/Res word: the part p
    contributes (p-1)! * Ind^(p+2) Res, factors in decreasing part order."""
    _require_zero_charge(ctx, "quantization")
    out = IndResExpr.zero()
    for p, c in e.terms.items():
        letters: list[str] = []
        scal = c
        for part in p.parts:
            j = part - 1
            scal *= factorial(j)
            letters.extend(["I"] * (j + 3) + ["R"])
        out = out + IndResExpr.word(letters, scal)
    return out
