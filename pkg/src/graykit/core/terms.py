"""Pasting terms over a presentation's generators.

Terms are immutable trees.  Horizontal composition ``a * b`` is written in
diagram order (``a`` then ``b``); vertical composition ``a / b`` puts ``a``
above ``b``.  The gray flavour adds whiskering ``f <| a`` / ``a |> f``,
interchanger literals ``sigma(b, a)``, and reuses ``/`` for the vertical
composition of 2-cells and the transversal composition of 3-cells.

Boundaries are computed in *path form*: a 1-cell term's boundary is the
tuple of its generators with identities dropped, which decides boundary
compatibility without touching the word problem (strict associativity and
unit laws hold in every double category).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import IllTypedError, UnknownNameError

# cell kinds
OB, H, V, SQ = "ob", "h", "v", "sq"
C1, C2, C3 = "1", "2", "3"  # gray flavour


class Term:
    __slots__ = ()

    def __mul__(self, other: "Term") -> "Term":
        return HComp(self, other)

    def __truediv__(self, other: "Term") -> "Term":
        return VComp(self, other)


@dataclass(frozen=True)
class Gen(Term):
    name: str


@dataclass(frozen=True)
class IdH(Term):
    at: Term


@dataclass(frozen=True)
class IdV(Term):
    at: Term


@dataclass(frozen=True)
class IdSqH(Term):
    at: Term  # a v-cell term


@dataclass(frozen=True)
class IdSqV(Term):
    at: Term  # an h-cell term


@dataclass(frozen=True)
class HComp(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class VComp(Term):
    top: Term
    bottom: Term


@dataclass(frozen=True)
class WhiskL(Term):
    cell1: Term  # 1-cell on the left
    body: Term   # 2- or 3-cell


@dataclass(frozen=True)
class WhiskR(Term):
    body: Term
    cell1: Term


@dataclass(frozen=True)
class SigmaLit(Term):
    later: Term   # 2-cell in the right-hand hom
    earlier: Term  # 2-cell in the left-hand hom


# ---------------------------------------------------------------------------
# Printing (surface grammar)
# ---------------------------------------------------------------------------


def term_to_text(t: Term) -> str:
    return _print(t, 0)


def _print(t: Term, ctx: int) -> str:
    # precedence levels: 0 top / vcomp, 1 hcomp, 2 whisker, 3 atom
    if isinstance(t, Gen):
        return t.name
    if isinstance(t, IdH):
        return f"id_h({_print(t.at, 0)})"
    if isinstance(t, IdV):
        return f"id_v({_print(t.at, 0)})"
    if isinstance(t, IdSqH):
        return f"id_sq_h({_print(t.at, 0)})"
    if isinstance(t, IdSqV):
        return f"id_sq_v({_print(t.at, 0)})"
    if isinstance(t, SigmaLit):
        return f"sigma({_print(t.later, 0)},{_print(t.earlier, 0)})"
    if isinstance(t, VComp):
        s = f"{_print(t.top, 1)} / {_print(t.bottom, 1)}"
        return f"({s})" if ctx > 0 else s
    if isinstance(t, HComp):
        s = f"{_print(t.left, 2)} * {_print(t.right, 2)}"
        return f"({s})" if ctx > 1 else s
    if isinstance(t, WhiskL):
        s = f"{_print(t.cell1, 3)} <| {_print(t.body, 3)}"
        return f"({s})" if ctx > 2 else s
    if isinstance(t, WhiskR):
        s = f"{_print(t.body, 3)} |> {_print(t.cell1, 3)}"
        return f"({s})" if ctx > 2 else s
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# Kinds and boundaries over a double-flavour presentation signature
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SqBoundary:
    """Square-term boundary: corner objects plus four generator paths."""

    nw: str
    ne: str
    sw: str
    se: str
    top: tuple[str, ...]
    bottom: tuple[str, ...]
    left: tuple[str, ...]
    right: tuple[str, ...]


class DblSignature:
    """Resolves generator kinds and boundaries for the double flavour.

    ``h`` and ``v`` map generator names to (source object, target object);
    ``sq`` maps to a 4-tuple of terms (top, bottom, left, right).
    """

    def __init__(self, obs, h, v, sq):
        self.obs = tuple(obs)
        self.h = dict(h)
        self.v = dict(v)
        self.sq = dict(sq)

    def kind(self, name: str) -> str:
        if name in self.h:
            return H
        if name in self.v:
            return V
        if name in self.sq:
            return SQ
        if name in self.obs:
            return OB
        raise UnknownNameError(name)

    # -- 1-cell paths ---------------------------------------------------

    def hpath(self, t: Term) -> tuple[str, tuple[str, ...], str]:
        """(source object, generator path, target object) of an h-term."""
        if isinstance(t, Gen):
            if t.name not in self.h:
                raise IllTypedError(f"{t.name} is not an h-cell")
            s, g = self.h[t.name]
            return s, (t.name,), g
        if isinstance(t, IdH):
            x = self.obname(t.at)
            return x, (), x
        if isinstance(t, HComp):
            s1, p1, t1 = self.hpath(t.left)
            s2, p2, t2 = self.hpath(t.right)
            if t1 != s2:
                raise IllTypedError(
                    f"h-composition mismatch: {term_to_text(t)}")
            return s1, p1 + p2, t2
        raise IllTypedError(f"not an h-term: {term_to_text(t)}")

    def vpath(self, t: Term) -> tuple[str, tuple[str, ...], str]:
        if isinstance(t, Gen):
            if t.name not in self.v:
                raise IllTypedError(f"{t.name} is not a v-cell")
            s, g = self.v[t.name]
            return s, (t.name,), g
        if isinstance(t, IdV):
            x = self.obname(t.at)
            return x, (), x
        if isinstance(t, VComp):
            s1, p1, t1 = self.vpath(t.top)
            s2, p2, t2 = self.vpath(t.bottom)
            if t1 != s2:
                raise IllTypedError(
                    f"v-composition mismatch: {term_to_text(t)}")
            return s1, p1 + p2, t2
        raise IllTypedError(f"not a v-term: {term_to_text(t)}")

    def obname(self, t: Term) -> str:
        if isinstance(t, Gen) and t.name in self.obs:
            return t.name
        raise IllTypedError(f"not an object: {term_to_text(t)}")

    # -- squares ----------------------------------------------------------

    def sq_boundary(self, t: Term) -> SqBoundary:
        if isinstance(t, Gen):
            if t.name not in self.sq:
                raise IllTypedError(f"{t.name} is not a square")
            top, bottom, left, right = self.sq[t.name]
            nw, tp, ne = self.hpath(top)
            sw, bp, se = self.hpath(bottom)
            nw2, lp, sw2 = self.vpath(left)
            ne2, rp, se2 = self.vpath(right)
            if (nw, ne, sw, se) != (nw2, ne2, sw2, se2):
                raise IllTypedError(f"frame of {t.name} does not close")
            return SqBoundary(nw, ne, sw, se, tp, bp, lp, rp)
        if isinstance(t, IdSqV):
            s, p, g = self.hpath(t.at)
            return SqBoundary(s, g, s, g, p, p, (), ())
        if isinstance(t, IdSqH):
            s, p, g = self.vpath(t.at)
            return SqBoundary(s, s, g, g, (), (), p, p)
        if isinstance(t, HComp):
            a = self.sq_boundary(t.left)
            b = self.sq_boundary(t.right)
            if (a.right, a.ne, a.se) != (b.left, b.nw, b.sw):
                raise IllTypedError(
                    f"square h-pasting mismatch: {term_to_text(t)}")
            return SqBoundary(a.nw, b.ne, a.sw, b.se,
                              a.top + b.top, a.bottom + b.bottom,
                              a.left, b.right)
        if isinstance(t, VComp):
            a = self.sq_boundary(t.top)
            b = self.sq_boundary(t.bottom)
            if (a.bottom, a.sw, a.se) != (b.top, b.nw, b.ne):
                raise IllTypedError(
                    f"square v-pasting mismatch: {term_to_text(t)}")
            return SqBoundary(a.nw, a.ne, b.sw, b.se,
                              a.top, b.bottom,
                              a.left + b.left, a.right + b.right)
        raise IllTypedError(f"not a square term: {term_to_text(t)}")

    def term_kind(self, t: Term) -> str:
        """Infer which of ob/h/v/sq a term is, raising when ill formed."""
        if isinstance(t, Gen):
            return self.kind(t.name)
        if isinstance(t, IdH):
            return H
        if isinstance(t, IdV):
            return V
        if isinstance(t, (IdSqH, IdSqV)):
            return SQ
        if isinstance(t, HComp):
            k = self.term_kind(t.left)
            if k not in (H, SQ) or self.term_kind(t.right) != k:
                raise IllTypedError(term_to_text(t))
            return k
        if isinstance(t, VComp):
            k = self.term_kind(t.top)
            if k not in (V, SQ) or self.term_kind(t.bottom) != k:
                raise IllTypedError(term_to_text(t))
            return k
        raise IllTypedError(term_to_text(t))

    def check(self, t: Term) -> str:
        """Typecheck a term; returns its kind."""
        k = self.term_kind(t)
        if k == H:
            self.hpath(t)
        elif k == V:
            self.vpath(t)
        elif k == SQ:
            self.sq_boundary(t)
        return k


# ---------------------------------------------------------------------------
# Evaluation into a finite double category
# ---------------------------------------------------------------------------


def eval_term(t: Term, cat, assign: dict[str, str]) -> str:
    """Interpret a double-flavour term in ``cat`` via a generator assignment.

    ``assign`` maps generator names (of every dimension) to cell names of
    ``cat``.  Boundary violations surface as BoundaryMismatchError from the
    category's own tables.
    """
    if isinstance(t, Gen):
        try:
            return assign[t.name]
        except KeyError:
            raise UnknownNameError(t.name) from None
    if isinstance(t, IdH):
        return cat.id_h(eval_term(t.at, cat, assign))
    if isinstance(t, IdV):
        return cat.id_v(eval_term(t.at, cat, assign))
    if isinstance(t, IdSqH):
        return cat.id_sq_h(eval_term(t.at, cat, assign))
    if isinstance(t, IdSqV):
        return cat.id_sq_v(eval_term(t.at, cat, assign))
    if isinstance(t, HComp):
        a = eval_term(t.left, cat, assign)
        b = eval_term(t.right, cat, assign)
        if a in cat.hcells:
            return cat.hcomp(a, b)
        return cat.sq_hcomp(a, b)
    if isinstance(t, VComp):
        a = eval_term(t.top, cat, assign)
        b = eval_term(t.bottom, cat, assign)
        if a in cat.vcells:
            return cat.vcomp(a, b)
        return cat.sq_vcomp(a, b)
    raise IllTypedError(f"cannot evaluate {term_to_text(t)}")


def gens_of(t: Term) -> set[str]:
    if isinstance(t, Gen):
        return {t.name}
    out: set[str] = set()
    for attr in ("at", "left", "right", "top", "bottom",
                 "cell1", "body", "later", "earlier"):
        sub = getattr(t, attr, None)
        if isinstance(sub, Term):
            out |= gens_of(sub)
    return out
