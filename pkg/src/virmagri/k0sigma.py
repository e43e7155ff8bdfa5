"""The free abelian group on partition classes and its functor-induced maps.

A class combination is written as an integer combination of basis symbols
[mu] for partitions mu.  Under phi_sigma the basis element [mu] goes to
the monomial whose derivative orders are the parts of mu, each lowered by
one; that identification transports the whole bracket calculus onto the
partition side.
"""

from __future__ import annotations

from .brackets import bracket_master
from .diffpoly import AlgebraCtx, DiffPoly
from .errors import DomainError
from .partitions import Partition


class K0SigmaElem:
    """Integer combination of partition basis classes."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {p: c for p, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "K0SigmaElem":
        return cls()

    @classmethod
    def basis(cls, p) -> "K0SigmaElem":
        return cls({Partition(p): 1})

    @classmethod
    def unit(cls) -> "K0SigmaElem":
        """The class of the empty partition, unit of the product."""
        return cls.basis(())

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, K0SigmaElem) and self.terms == other.terms

    def __add__(self, other: "K0SigmaElem") -> "K0SigmaElem":
        out = dict(self.terms)
        for p, c in other.terms.items():
            s = out.get(p, 0) + c
            if s:
                out[p] = s
            elif p in out:
                del out[p]
        return K0SigmaElem(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return K0SigmaElem({p: -c for p, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return K0SigmaElem({p: c * other for p, c in self.terms.items()})
        out: dict = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                u = p.union(q)
                s = out.get(u, 0) + c * d
                if s:
                    out[u] = s
                elif u in out:
                    del out[u]
        return K0SigmaElem(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0].size, kv[0].parts), reverse=True)

    def __str__(self):
        from .text import format_k0sigma

        return format_k0sigma(self)

    __repr__ = __str__


def _linear(e: K0SigmaElem, on_basis) -> K0SigmaElem:
    """Extend a basis-level map (Partition -> K0SigmaElem) linearly."""
    out: dict = {}
    for p, c in e.terms.items():
        for q, d in on_basis(p).terms.items():
            s = out.get(q, 0) + c * d
            if s:
                out[q] = s
            elif q in out:
                del out[q]
    return K0SigmaElem(out)


def phi_sigma(e: K0SigmaElem) -> DiffPoly:
    """Basis class of mu goes to the monomial with orders (part-1 for each part)."""
    out: dict = {}
    for p, c in e.terms.items():
        m = tuple(part - 1 for part in p.parts)
        out[m] = out.get(m, 0) + c
    return DiffPoly(out)


def phi_sigma_inv(f: DiffPoly) -> K0SigmaElem:
    """Inverse correspondence: order k becomes part k+1."""
    out: dict = {}
    for m, c in f.terms.items():
        p = Partition(k + 1 for k in m)
        out[p] = out.get(p, 0) + c
    return K0SigmaElem(out)


def ind(e: K0SigmaElem) -> K0SigmaElem:
    """Linear extension of the one-box-addition branching sum."""
    return _linear(e, lambda p: K0SigmaElem(
        {q: 1 for q in p.addable_results()}))


def res(e: K0SigmaElem) -> K0SigmaElem:
    """Linear extension of the one-box-removal branching sum."""
    return _linear(e, lambda p: K0SigmaElem(
        {q: 1 for q in p.removable_results()}))


def _p_i_basis(mu: Partition, i: int) -> K0SigmaElem:
    conj = mu.conjugate().parts
    l = len(conj)
    if i > l + 1:
        return K0SigmaElem.zero()
    if i > 1:
        here = conj[i - 1] if i - 1 < l else 0
        if not conj[i - 2] > here:
            return K0SigmaElem.zero()
    cols = list(conj) + [0] * (i - l)
    cols[i - 1] += 1
    return K0SigmaElem.basis(Partition(cols).conjugate())


def p_i_ind(e: K0SigmaElem, i: int) -> K0SigmaElem:
    """Column-selective induction: add one box to column i of the
    conjugate diagram when that keeps it a diagram, otherwise kill the
    class."""
    if i < 1:
        raise DomainError("column index must be at least 1, got %d" % i)
    return _linear(e, lambda p: _p_i_basis(p, i))


def pj_ind(e: K0SigmaElem, j: int) -> K0SigmaElem:
    """Insert a row of j boxes into every basis diagram.

    Computed twice, as direct row insertion and as the composition of the
    column steps p_1 up to p_j; the two routes must agree on every input.
    """
    if j < 1:
        raise DomainError("row length must be at least 1, got %d" % j)
    by_row = _linear(e, lambda p: K0SigmaElem.basis(p.insert_row(j)))
    by_cols = e
    for i in range(1, j + 1):
        by_cols = p_i_ind(by_cols, i)
    if by_row != by_cols:
        raise RuntimeError(
            "row insertion and column-step composition disagree on %r (j=%d)" % (e, j))
    return by_row


def _nabla_basis(p: Partition) -> K0SigmaElem:
    out: dict = {}
    parts = p.parts
    for v, cnt in p.multiplicities():
        idx = parts.index(v)
        q = Partition(parts[:idx] + (v + 1,) + parts[idx + 1:])
        out[q] = out.get(q, 0) + cnt
    return K0SigmaElem(out)


def nabla(e: K0SigmaElem) -> K0SigmaElem:
    """The derivation on class combinations: grow one part by a box,
    weighted by the multiplicity of the part value."""
    return _linear(e, _nabla_basis)


def lambda_bracket_k0(a: K0SigmaElem, b: K0SigmaElem, ctx: AlgebraCtx) -> dict[int, K0SigmaElem]:
    """The bracket transported through phi_sigma, coefficient by coefficient."""
    br = bracket_master(phi_sigma(a), phi_sigma(b), ctx)
    return {k: phi_sigma_inv(p) for k, p in br.coeffs.items()}
