"""Double functors of the four strictness types, with checker and oracle.

A functor is strict in the vertical direction for every type tag; laxity
lives in the horizontal direction through compositor and unitor squares.
Structure squares are stored explicitly even when forced (strict functors
carry identity squares) so a single checker code path covers every type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from ..core.finite import FiniteDoubleCategory
from ..errors import SizeBoundExceeded, TypeTagError
from ..report import Report

KINDS = ("strict", "lax", "oplax", "pseudo")


@dataclass
class DblFunctor:
    kind: str
    dom: FiniteDoubleCategory
    cod: FiniteDoubleCategory
    ob: dict[str, str]
    h: dict[str, str]
    v: dict[str, str]
    sq: dict[str, str]
    # compositor square per composable h-pair; unitor square per object
    hcomp_cell: dict[tuple[str, str], str] = field(default_factory=dict)
    hunit_cell: dict[str, str] = field(default_factory=dict)

    def key(self):
        return (self.kind,
                tuple(sorted(self.ob.items())),
                tuple(sorted(self.h.items())),
                tuple(sorted(self.v.items())),
                tuple(sorted(self.sq.items())),
                tuple(sorted(self.hcomp_cell.items())),
                tuple(sorted(self.hunit_cell.items())))

    def __eq__(self, other):
        return isinstance(other, DblFunctor) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def apply(self, dim: str, cell: str) -> str:
        return {"ob": self.ob, "h": self.h, "v": self.v,
                "sq": self.sq}[dim][cell]


def identity_functor(cat: FiniteDoubleCategory,
                     kind: str = "strict") -> DblFunctor:
    f = DblFunctor(kind, cat, cat,
                   {x: x for x in cat.objects},
                   {h: h for h in cat.hcells},
                   {v: v for v in cat.vcells},
                   {s: s for s in cat.squares})
    _force_identity_structure(f)
    return f


def compose_functors(f: DblFunctor, g: DblFunctor) -> DblFunctor:
    """g after f; defined for strict functors."""
    if f.kind != "strict" or g.kind != "strict":
        raise TypeTagError("composition implemented for strict functors")
    out = DblFunctor(
        "strict", f.dom, g.cod,
        {x: g.ob[y] for x, y in f.ob.items()},
        {h: g.h[y] for h, y in f.h.items()},
        {v: g.v[y] for v, y in f.v.items()},
        {s: g.sq[y] for s, y in f.sq.items()})
    _force_identity_structure(out)
    return out


def constant_functor(dom: FiniteDoubleCategory, cod: FiniteDoubleCategory,
                     at: str, kind: str = "strict") -> DblFunctor:
    f = DblFunctor(
        kind, dom, cod,
        {x: at for x in dom.objects},
        {h: cod.id_h(at) for h in dom.hcells},
        {v: cod.id_v(at) for v in dom.vcells},
        {s: cod.unit_square(at) for s in dom.squares})
    _force_identity_structure(f)
    return f


def _force_identity_structure(f: DblFunctor) -> None:
    cod, dom = f.cod, f.dom
    for (a, b) in dom.hcomp_table:
        f.hcomp_cell[(a, b)] = cod.sq_vid[
            cod.hcomp(f.h[a], f.h[b])]
    for x in dom.objects:
        f.hunit_cell[x] = cod.sq_vid[cod.id_h(f.ob[x])]


# ---------------------------------------------------------------------------
# Checker
# ---------------------------------------------------------------------------


def check_functor(f: DblFunctor) -> Report:
    rep = Report("functor", f"{f.dom.name}->{f.cod.name}:{f.kind}")
    if f.kind not in KINDS:
        raise TypeTagError(f.kind)
    dom, cod = f.dom, f.cod

    for x in dom.objects:
        rep.require("total", ("ob", x), x in f.ob and f.ob[x] in cod.objects,
                    True)
    for h, (s, t) in dom.hcells.items():
        img = f.h.get(h)
        rep.require("boundary", ("h", h),
                    img is not None and cod.hcells.get(img)
                    == (f.ob[s], f.ob[t]), True)
    for v, (s, t) in dom.vcells.items():
        img = f.v.get(v)
        rep.require("boundary", ("v", v),
                    img is not None and cod.vcells.get(img)
                    == (f.ob[s], f.ob[t]), True)
    for s, fr in dom.squares.items():
        img = f.sq.get(s)
        ok = img is not None and img in cod.squares
        if ok:
            got = cod.frame(img)
            ok = (got.top == f.h[fr.top] and got.bottom == f.h[fr.bottom]
                  and got.left == f.v[fr.left] and got.right == f.v[fr.right])
        rep.require("boundary", ("sq", s), ok, True)
    if not rep.ok:
        return rep

    # vertical direction is strict for every type
    for x in dom.objects:
        rep.require("v-id", (x,), f.v[dom.id_v(x)], cod.id_v(f.ob[x]))
    for (u, w), uw in dom.vcomp_table.items():
        rep.require("v-comp", (u, w), f.v[uw], cod.vcomp(f.v[u], f.v[w]))
    for h in dom.hcells:
        rep.require("v-sq-id", (h,), f.sq[dom.id_sq_v(h)],
                    cod.id_sq_v(f.h[h]))
    for (a, b), ab in dom.sq_vcomp_table.items():
        rep.require("v-sq-comp", (a, b), f.sq[ab],
                    cod.sq_vcomp(f.sq[a], f.sq[b]))

    lax_like = f.kind in ("lax", "pseudo", "strict")
    for (a, b), ab in dom.hcomp_table.items():
        cell = f.hcomp_cell.get((a, b))
        if cell is None or cell not in cod.squares:
            rep.fail("compositor", (a, b), "missing structure square")
            continue
        fr = cod.frame(cell)
        two = cod.hcomp(f.h[a], f.h[b])
        one = f.h[ab]
        top, bottom = (two, one) if lax_like else (one, two)
        ok = (fr.top == top and fr.bottom == bottom
              and cod.is_vid(fr.left) and cod.is_vid(fr.right))
        rep.require("compositor-frame", (a, b), ok, True)
        if f.kind == "strict":
            rep.require("strict-comp", (a, b), one, two)
            rep.require("strict-comp-cell", (a, b), cell, cod.sq_vid[two])
    for x in dom.objects:
        cell = f.hunit_cell.get(x)
        if cell is None or cell not in cod.squares:
            rep.fail("unitor", (x,), "missing structure square")
            continue
        fr = cod.frame(cell)
        one = cod.id_h(f.ob[x])
        fone = f.h[dom.id_h(x)]
        top, bottom = (one, fone) if lax_like else (fone, one)
        ok = (fr.top == top and fr.bottom == bottom
              and cod.is_vid(fr.left) and cod.is_vid(fr.right))
        rep.require("unitor-frame", (x,), ok, True)
        if f.kind == "strict":
            rep.require("strict-unit", (x,), fone, one)
            rep.require("strict-unit-cell", (x,), cell, cod.sq_vid[one])
    if not rep.ok:
        return rep

    if f.kind == "pseudo":
        for (a, b), _ in dom.hcomp_table.items():
            rep.require("invertible", ("comp", a, b),
                        _vert_invertible(cod, f.hcomp_cell[(a, b)]), True)
        for x in dom.objects:
            rep.require("invertible", ("unit", x),
                        _vert_invertible(cod, f.hunit_cell[x]), True)

    if lax_like:
        _lax_axioms(f, rep)
    else:
        _oplax_axioms(f, rep)
    return rep


def _vert_invertible(cat: FiniteDoubleCategory, s: str) -> bool:
    fr = cat.frame(s)
    for t in cat.squares_with_frame(
            type(fr)(fr.bottom, fr.top, fr.left, fr.right)):
        if (cat.sq_vcomp(s, t) == cat.id_sq_v(fr.top)
                and cat.sq_vcomp(t, s) == cat.id_sq_v(fr.bottom)):
            return True
    return False


def _lax_axioms(f: DblFunctor, rep: Report) -> None:
    dom, cod = f.dom, f.cod
    # naturality of the compositor at horizontally composable squares
    for (a, b), ab in dom.sq_hcomp_table.items():
        fa, fb = dom.frame(a), dom.frame(b)
        lhs = cod.sq_vcomp(cod.sq_hcomp(f.sq[a], f.sq[b]),
                           f.hcomp_cell[(fa.bottom, fb.bottom)])
        rhs = cod.sq_vcomp(f.hcomp_cell[(fa.top, fb.top)],
                           f.sq[dom.sq_hcomp(a, b)])
        rep.require("compositor-natural", (a, b), lhs, rhs)
    # associativity
    for (a, b), ab in dom.hcomp_table.items():
        for c_ in dom.hcells:
            if dom.htgt(b) != dom.hsrc(c_):
                continue
            lhs = cod.sq_vcomp(
                cod.sq_hcomp(f.hcomp_cell[(a, b)], cod.id_sq_v(f.h[c_])),
                f.hcomp_cell[(ab, c_)])
            rhs = cod.sq_vcomp(
                cod.sq_hcomp(cod.id_sq_v(f.h[a]), f.hcomp_cell[(b, c_)]),
                f.hcomp_cell[(a, dom.hcomp(b, c_))])
            rep.require("compositor-assoc", (a, b, c_), lhs, rhs)
    # unit laws
    for h, (s, t) in dom.hcells.items():
        lhs = cod.sq_vcomp(
            cod.sq_hcomp(f.hunit_cell[s], cod.id_sq_v(f.h[h])),
            f.hcomp_cell[(dom.id_h(s), h)])
        rep.require("unit-left", (h,), lhs, cod.id_sq_v(f.h[h]))
        rhs = cod.sq_vcomp(
            cod.sq_hcomp(cod.id_sq_v(f.h[h]), f.hunit_cell[t]),
            f.hcomp_cell[(h, dom.id_h(t))])
        rep.require("unit-right", (h,), rhs, cod.id_sq_v(f.h[h]))
    # unitor naturality at vertical cells
    for u, (s, t) in dom.vcells.items():
        lhs = cod.sq_vcomp(cod.id_sq_h(f.v[u]), f.hunit_cell[t])
        rhs = cod.sq_vcomp(f.hunit_cell[s], f.sq[dom.id_sq_h(u)])
        rep.require("unitor-natural", (u,), lhs, rhs)


def _oplax_axioms(f: DblFunctor, rep: Report) -> None:
    dom, cod = f.dom, f.cod
    for (a, b), ab in dom.sq_hcomp_table.items():
        fa, fb = dom.frame(a), dom.frame(b)
        lhs = cod.sq_vcomp(f.sq[dom.sq_hcomp(a, b)],
                           f.hcomp_cell[(fa.bottom, fb.bottom)])
        rhs = cod.sq_vcomp(f.hcomp_cell[(fa.top, fb.top)],
                           cod.sq_hcomp(f.sq[a], f.sq[b]))
        rep.require("compositor-natural", (a, b), lhs, rhs)
    for (a, b), ab in dom.hcomp_table.items():
        for c_ in dom.hcells:
            if dom.htgt(b) != dom.hsrc(c_):
                continue
            lhs = cod.sq_vcomp(
                f.hcomp_cell[(ab, c_)],
                cod.sq_hcomp(f.hcomp_cell[(a, b)], cod.id_sq_v(f.h[c_])))
            rhs = cod.sq_vcomp(
                f.hcomp_cell[(a, dom.hcomp(b, c_))],
                cod.sq_hcomp(cod.id_sq_v(f.h[a]), f.hcomp_cell[(b, c_)]))
            rep.require("compositor-assoc", (a, b, c_), lhs, rhs)
    for h, (s, t) in dom.hcells.items():
        lhs = cod.sq_vcomp(
            f.hcomp_cell[(dom.id_h(s), h)],
            cod.sq_hcomp(f.hunit_cell[s], cod.id_sq_v(f.h[h])))
        rep.require("unit-left", (h,), lhs, cod.id_sq_v(f.h[h]))
        rhs = cod.sq_vcomp(
            f.hcomp_cell[(h, dom.id_h(t))],
            cod.sq_hcomp(cod.id_sq_v(f.h[h]), f.hunit_cell[t]))
        rep.require("unit-right", (h,), rhs, cod.id_sq_v(f.h[h]))
    for u, (s, t) in dom.vcells.items():
        lhs = cod.sq_vcomp(f.sq[dom.id_sq_h(u)], f.hunit_cell[t])
        rhs = cod.sq_vcomp(f.hunit_cell[s], cod.id_sq_h(f.v[u]))
        rep.require("unitor-natural", (u,), lhs, rhs)


# ---------------------------------------------------------------------------
# Brute-force enumeration of functors
# ---------------------------------------------------------------------------

DEFAULT_NODE_CAP = 5_000_000


def enumerate_functors(dom: FiniteDoubleCategory, cod: FiniteDoubleCategory,
                       kind: str = "strict",
                       node_cap: int = DEFAULT_NODE_CAP
                       ) -> list[DblFunctor]:
    """The complete duplicate-free list of functors of the requested type.

    All choices of cell assignments and (for non-strict types) structure
    squares satisfying the functor axioms, in canonical lexicographic order
    on generator images.
    """
    if kind not in KINDS:
        raise TypeTagError(kind)
    results: list[DblFunctor] = []
    nodes = 0

    obs = sorted(dom.objects)
    hs = sorted(dom.nonid_hcells())
    vs = sorted(dom.nonid_vcells())
    sqs = sorted(s for s in dom.squares
                 if not dom.is_sq_vid(s) and not dom.is_sq_hid(s))

    def bump():
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise SizeBoundExceeded("functor search exceeded node cap")

    def fill_identities(fo, fh, fv, fsq):
        for x in dom.objects:
            fh[dom.id_h(x)] = (cod.id_h(fo[x]) if kind == "strict"
                               else fh.get(dom.id_h(x)))
            fv[dom.id_v(x)] = cod.id_v(fo[x])
        for h in dom.hcells:
            if h in fh and fh[h] is not None:
                fsq[dom.id_sq_v(h)] = cod.id_sq_v(fh[h])
        for u in dom.vcells:
            if dom.is_vid(u):
                fsq[dom.id_sq_h(u)] = cod.unit_square(fo[dom.vsrc(u)])

    def ob_maps():
        for combo in iproduct(sorted(cod.objects), repeat=len(obs)):
            bump()
            yield dict(zip(obs, combo))

    def h_maps(fo):
        # identity h-cells: forced for strict, free (with endpoints) otherwise
        free = list(hs)
        if kind != "strict":
            free = free + [dom.id_h(x) for x in obs]
        cand = []
        for h in free:
            s, t = dom.hcells[h]
            cs = sorted(x for x, b in cod.hcells.items()
                        if b == (fo[s], fo[t]))
            if not cs:
                return
            cand.append(cs)
        for combo in iproduct(*cand):
            bump()
            fh = dict(zip(free, combo))
            if kind == "strict":
                for x in obs:
                    fh[dom.id_h(x)] = cod.id_h(fo[x])
                ok = all(
                    fh[fg] == cod.hcomp(fh[a], fh[b])
                    for (a, b), fg in dom.hcomp_table.items())
                if not ok:
                    continue
            yield fh

    def v_maps(fo):
        cand = []
        for u in vs:
            s, t = dom.vcells[u]
            cs = sorted(x for x, b in cod.vcells.items()
                        if b == (fo[s], fo[t]))
            if not cs:
                return
            cand.append(cs)
        for combo in iproduct(*cand):
            bump()
            fv = dict(zip(vs, combo))
            for x in obs:
                fv[dom.id_v(x)] = cod.id_v(fo[x])
            if all(fv[uw] == cod.vcomp(fv[u], fv[w])
                   for (u, w), uw in dom.vcomp_table.items()):
                yield fv

    def sq_maps(fo, fh, fv):
        cand = []
        free = list(sqs)
        if kind != "strict":
            # horizontal identity squares on non-identity v-cells are free
            free = free + [dom.id_sq_h(u) for u in vs]
        for s in free:
            fr = dom.frame(s)
            want = type(fr)(fh[fr.top], fh[fr.bottom],
                            fv[fr.left], fv[fr.right])
            cs = cod.squares_with_frame(want)
            if not cs:
                return
            cand.append(cs)
        for combo in iproduct(*cand):
            bump()
            fsq = dict(zip(free, combo))
            fill = dict(fsq)
            for h in dom.hcells:
                fill[dom.id_sq_v(h)] = cod.id_sq_v(fh[h])
            for u in dom.vcells:
                if dom.is_vid(u):
                    fill[dom.id_sq_h(u)] = cod.unit_square(fo[dom.vsrc(u)])
                elif kind == "strict":
                    fill[dom.id_sq_h(u)] = cod.id_sq_h(fv[u])
            if len(fill) < len(dom.squares):
                continue
            ok = all(fill[ab] == cod.sq_vcomp(fill[a], fill[b])
                     for (a, b), ab in dom.sq_vcomp_table.items())
            if ok and kind == "strict":
                ok = all(fill[ab] == cod.sq_hcomp(fill[a], fill[b])
                         for (a, b), ab in dom.sq_hcomp_table.items())
            if ok:
                yield fill

    def structure(fo, fh, fv, fsq):
        if kind == "strict":
            f = DblFunctor(kind, dom, cod, fo, fh, fv, fsq)
            _force_identity_structure(f)
            yield f
            return
        lax_like = kind in ("lax", "pseudo")
        pairs = sorted(dom.hcomp_table)
        cand = []
        for (a, b) in pairs:
            two = cod.hcomp(fh[a], fh[b])
            one = fh[dom.hcomp_table[(a, b)]]
            top, bottom = (two, one) if lax_like else (one, two)
            cs = cod.globular_squares(top, bottom)
            if kind == "pseudo":
                cs = [c for c in cs if _vert_invertible(cod, c)]
            if not cs:
                return
            cand.append(cs)
        ucand = []
        for x in obs:
            one = cod.id_h(fo[x])
            fone = fh[dom.id_h(x)]
            top, bottom = (one, fone) if lax_like else (fone, one)
            cs = cod.globular_squares(top, bottom)
            if kind == "pseudo":
                cs = [c for c in cs if _vert_invertible(cod, c)]
            if not cs:
                return
            ucand.append(cs)
        for combo in iproduct(*cand):
            for ucombo in iproduct(*ucand):
                bump()
                f = DblFunctor(kind, dom, cod, fo, fh, fv, dict(fsq),
                               dict(zip(pairs, combo)),
                               dict(zip(obs, ucombo)))
                if check_functor(f).ok:
                    yield f

    for fo in ob_maps():
        for fh in h_maps(fo):
            for fv in v_maps(fo):
                for fsq in sq_maps(fo, fh, fv):
                    for f in structure(fo, fh, fv, fsq):
                        results.append(f)

    uniq = {}
    for f in results:
        uniq[f.key()] = f
    return [uniq[k] for k in sorted(uniq)]
