"""Transformations between double functors, in all four directional kinds.

Kinds: ``h-oplax`` and ``h-lax`` have horizontal 1-cell components and
globular structure squares at horizontal cells; ``v-lax`` and ``v-oplax``
are the vertical mirrors.  The five axioms per kind are checked at every
generator instance against the functors' compositors and unitors; functors
must be of a lax-style type (strict, lax or pseudo).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import KindMismatchError, NotComposableError, TypeTagError
from ..report import Report
from .functor import DblFunctor

H_KINDS = ("h-oplax", "h-lax")
V_KINDS = ("v-lax", "v-oplax")
ALL_KINDS = H_KINDS + V_KINDS


@dataclass
class DblTransformation:
    kind: str
    src: DblFunctor
    tgt: DblFunctor
    comp: dict[str, str]   # per-object 1-cell components
    at_h: dict[str, str]   # structure square per horizontal 1-cell
    at_v: dict[str, str]   # structure square per vertical 1-cell

    def key(self):
        return (self.kind, self.src.key(), self.tgt.key(),
                tuple(sorted(self.comp.items())),
                tuple(sorted(self.at_h.items())),
                tuple(sorted(self.at_v.items())))

    def __eq__(self, other):
        return (isinstance(other, DblTransformation)
                and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())


def identity_transformation(f: DblFunctor, kind: str) -> DblTransformation:
    cod, dom = f.cod, f.dom
    if kind in H_KINDS:
        comp = {x: cod.id_h(f.ob[x]) for x in dom.objects}
        at_h = {h: cod.id_sq_v(f.h[h]) for h in dom.hcells}
        at_v = {u: cod.id_sq_h(f.v[u]) for u in dom.vcells}
    else:
        comp = {x: cod.id_v(f.ob[x]) for x in dom.objects}
        at_h = {h: cod.id_sq_v(f.h[h]) for h in dom.hcells}
        at_v = {u: cod.id_sq_h(f.v[u]) for u in dom.vcells}
    return DblTransformation(kind, f, f, comp, at_h, at_v)


def _frames_ok(t: DblTransformation, rep: Report) -> bool:
    f, g = t.src, t.tgt
    dom, cod = f.dom, f.cod
    ok = True
    if t.kind in H_KINDS:
        for x in dom.objects:
            c = t.comp.get(x)
            ok &= rep.require(
                "component", (x,),
                c is not None and cod.hcells.get(c) == (f.ob[x], g.ob[x]),
                True)
        if not ok:
            return False
        for k, (s, y) in dom.hcells.items():
            cell = t.at_h.get(k)
            if cell is None or cell not in cod.squares:
                rep.fail("at-h-frame", (k,), "missing")
                ok = False
                continue
            fr = cod.frame(cell)
            upper = cod.hcomp(f.h[k], t.comp[y])
            lower = cod.hcomp(t.comp[s], g.h[k])
            top, bottom = ((upper, lower) if t.kind == "h-oplax"
                           else (lower, upper))
            ok &= rep.require(
                "at-h-frame", (k,),
                (fr.top, fr.bottom) == (top, bottom)
                and cod.is_vid(fr.left) and cod.is_vid(fr.right), True)
        for u, (s, y) in dom.vcells.items():
            cell = t.at_v.get(u)
            if cell is None or cell not in cod.squares:
                rep.fail("at-v-frame", (u,), "missing")
                ok = False
                continue
            fr = cod.frame(cell)
            ok &= rep.require(
                "at-v-frame", (u,),
                fr.as_tuple() == (t.comp[s], t.comp[y], f.v[u], g.v[u]),
                True)
    else:
        for x in dom.objects:
            c = t.comp.get(x)
            ok &= rep.require(
                "component", (x,),
                c is not None and cod.vcells.get(c) == (f.ob[x], g.ob[x]),
                True)
        if not ok:
            return False
        for k, (s, y) in dom.hcells.items():
            cell = t.at_h.get(k)
            if cell is None or cell not in cod.squares:
                rep.fail("at-h-frame", (k,), "missing")
                ok = False
                continue
            fr = cod.frame(cell)
            ok &= rep.require(
                "at-h-frame", (k,),
                fr.as_tuple() == (f.h[k], g.h[k], t.comp[s], t.comp[y]),
                True)
        for u, (s, y) in dom.vcells.items():
            cell = t.at_v.get(u)
            if cell is None or cell not in cod.squares:
                rep.fail("at-v-frame", (u,), "missing")
                ok = False
                continue
            fr = cod.frame(cell)
            left_lax = cod.vcomp(t.comp[s], g.v[u])
            right_lax = cod.vcomp(f.v[u], t.comp[y])
            left, right = ((left_lax, right_lax) if t.kind == "v-lax"
                           else (right_lax, left_lax))
            ok &= rep.require(
                "at-v-frame", (u,),
                (fr.left, fr.right) == (left, right)
                and cod.is_hid(fr.top) and cod.is_hid(fr.bottom), True)
    return ok


def check_transformation(t: DblTransformation,
                         f: DblFunctor | None = None,
                         g: DblFunctor | None = None) -> Report:
    f = f or t.src
    g = g or t.tgt
    rep = Report("transformation", t.kind)
    if t.kind not in ALL_KINDS:
        raise KindMismatchError(t.kind)
    if f.kind in ("oplax",) or g.kind in ("oplax",):
        raise TypeTagError(
            "transformation axioms implemented for lax-style functors")
    if (f.dom is not t.src.dom and f.dom.name != t.src.dom.name):
        raise KindMismatchError("functor mismatch")
    if not _frames_ok(t, rep):
        return rep
    dom, cod = f.dom, f.cod
    if t.kind == "h-oplax":
        _hot_axioms(t, f, g, rep)
    elif t.kind == "h-lax":
        _hlt_axioms(t, f, g, rep)
    elif t.kind == "v-lax":
        _vlt_axioms(t, f, g, rep)
    else:
        _vot_axioms(t, f, g, rep)
    return rep


def _hot_axioms(t, f, g, rep):
    dom, cod = f.dom, f.cod
    hv = cod.sq_vcomp
    hh = cod.sq_hcomp
    for (a, b), ab in dom.hcomp_table.items():
        z = dom.htgt(b)
        lhs = hv(hh(f.hcomp_cell[(a, b)], cod.id_sq_v(t.comp[z])),
                 t.at_h[ab])
        rhs = hv(hh(cod.id_sq_v(f.h[a]), t.at_h[b]),
                 hv(hh(t.at_h[a], cod.id_sq_v(g.h[b])),
                    hh(cod.id_sq_v(t.comp[dom.hsrc(a)]),
                       g.hcomp_cell[(a, b)])))
        rep.require("hot-1", (a, b), lhs, rhs)
    for x in dom.objects:
        lhs = hv(hh(f.hunit_cell[x], cod.id_sq_v(t.comp[x])),
                 t.at_h[dom.id_h(x)])
        rhs = hh(cod.id_sq_v(t.comp[x]), g.hunit_cell[x])
        rep.require("hot-2", (x,), lhs, rhs)
    for (u, w), uw in dom.vcomp_table.items():
        rep.require("hot-3", (u, w), t.at_v[uw], hv(t.at_v[u], t.at_v[w]))
    for x in dom.objects:
        rep.require("hot-4", (x,), t.at_v[dom.id_v(x)],
                    cod.id_sq_v(t.comp[x]))
    for w, fr in dom.squares.items():
        lhs = hv(hh(f.sq[w], t.at_v[fr.right]), t.at_h[fr.bottom])
        rhs = hv(t.at_h[fr.top], hh(t.at_v[fr.left], g.sq[w]))
        rep.require("hot-5", (w,), lhs, rhs)


def _hlt_axioms(t, f, g, rep):
    dom, cod = f.dom, f.cod
    hv = cod.sq_vcomp
    hh = cod.sq_hcomp
    for (a, b), ab in dom.hcomp_table.items():
        x = dom.hsrc(a)
        z = dom.htgt(b)
        lhs = hv(hh(cod.id_sq_v(t.comp[x]), g.hcomp_cell[(a, b)]),
                 t.at_h[ab])
        rhs = hv(hh(t.at_h[a], cod.id_sq_v(g.h[b])),
                 hv(hh(cod.id_sq_v(f.h[a]), t.at_h[b]),
                    hh(f.hcomp_cell[(a, b)], cod.id_sq_v(t.comp[z]))))
        rep.require("hlt-1", (a, b), lhs, rhs)
    for x in dom.objects:
        lhs = hv(hh(cod.id_sq_v(t.comp[x]), g.hunit_cell[x]),
                 t.at_h[dom.id_h(x)])
        rhs = hh(f.hunit_cell[x], cod.id_sq_v(t.comp[x]))
        rep.require("hlt-2", (x,), lhs, rhs)
    for (u, w), uw in dom.vcomp_table.items():
        rep.require("hlt-3", (u, w), t.at_v[uw], hv(t.at_v[u], t.at_v[w]))
    for x in dom.objects:
        rep.require("hlt-4", (x,), t.at_v[dom.id_v(x)],
                    cod.id_sq_v(t.comp[x]))
    for w, fr in dom.squares.items():
        lhs = hv(t.at_h[fr.top], hh(f.sq[w], t.at_v[fr.right]))
        rhs = hv(hh(t.at_v[fr.left], g.sq[w]), t.at_h[fr.bottom])
        rep.require("hlt-5", (w,), lhs, rhs)


def _vlt_axioms(t, f, g, rep):
    dom, cod = f.dom, f.cod
    hv = cod.sq_vcomp
    hh = cod.sq_hcomp
    for (a, b), ab in dom.hcomp_table.items():
        lhs = hv(hh(t.at_h[a], t.at_h[b]), g.hcomp_cell[(a, b)])
        rhs = hv(f.hcomp_cell[(a, b)], t.at_h[ab])
        rep.require("vlt-1", (a, b), lhs, rhs)
    for x in dom.objects:
        lhs = hv(f.hunit_cell[x], t.at_h[dom.id_h(x)])
        rhs = hv(cod.id_sq_h(t.comp[x]), g.hunit_cell[x])
        rep.require("vlt-2", (x,), lhs, rhs)
    for (u, w), uw in dom.vcomp_table.items():
        lhs = hh(hv(t.at_v[u], cod.id_sq_h(g.v[w])),
                 hv(cod.id_sq_h(f.v[u]), t.at_v[w]))
        rep.require("vlt-3", (u, w), lhs, t.at_v[uw])
    for x in dom.objects:
        rep.require("vlt-4", (x,), t.at_v[dom.id_v(x)],
                    cod.id_sq_h(t.comp[x]))
    for w, fr in dom.squares.items():
        lhs = hh(hv(t.at_h[fr.top], g.sq[w]), t.at_v[fr.right])
        rhs = hh(t.at_v[fr.left], hv(f.sq[w], t.at_h[fr.bottom]))
        rep.require("vlt-5", (w,), lhs, rhs)


def _vot_axioms(t, f, g, rep):
    dom, cod = f.dom, f.cod
    hv = cod.sq_vcomp
    hh = cod.sq_hcomp
    for (a, b), ab in dom.hcomp_table.items():
        lhs = hv(hh(t.at_h[a], t.at_h[b]), g.hcomp_cell[(a, b)])
        rhs = hv(f.hcomp_cell[(a, b)], t.at_h[ab])
        rep.require("vot-1", (a, b), lhs, rhs)
    for x in dom.objects:
        lhs = hv(f.hunit_cell[x], t.at_h[dom.id_h(x)])
        rhs = hv(cod.id_sq_h(t.comp[x]), g.hunit_cell[x])
        rep.require("vot-2", (x,), lhs, rhs)
    for (u, w), uw in dom.vcomp_table.items():
        lhs = hh(hv(cod.id_sq_h(f.v[u]), t.at_v[w]),
                 hv(t.at_v[u], cod.id_sq_h(g.v[w])))
        rep.require("vot-3", (u, w), lhs, t.at_v[uw])
    for x in dom.objects:
        rep.require("vot-4", (x,), t.at_v[dom.id_v(x)],
                    cod.id_sq_h(t.comp[x]))
    for w, fr in dom.squares.items():
        lhs = hh(hv(f.sq[w], t.at_h[fr.bottom]), t.at_v[fr.right])
        rhs = hh(t.at_v[fr.left], hv(t.at_h[fr.top], g.sq[w]))
        rep.require("vot-5", (w,), lhs, rhs)


# ---------------------------------------------------------------------------
# Vertical composition of transformations (sharing a kind)
# ---------------------------------------------------------------------------


def vcompose_transformations(a: DblTransformation,
                             b: DblTransformation) -> DblTransformation:
    """The composite ``a`` then ``b``; requires cod(a) == dom(b)."""
    if a.kind != b.kind:
        raise NotComposableError(f"kinds differ: {a.kind} vs {b.kind}")
    if a.tgt.key() != b.src.key():
        raise NotComposableError("middle functor mismatch")
    f, g, h = a.src, a.tgt, b.tgt
    dom, cod = f.dom, f.cod
    hv = cod.sq_vcomp
    hh = cod.sq_hcomp
    if a.kind in H_KINDS:
        comp = {x: cod.hcomp(a.comp[x], b.comp[x]) for x in dom.objects}
        at_h = {}
        for k, (s, y) in dom.hcells.items():
            if a.kind == "h-oplax":
                at_h[k] = hv(hh(a.at_h[k], cod.id_sq_v(b.comp[y])),
                             hh(cod.id_sq_v(a.comp[s]), b.at_h[k]))
            else:
                at_h[k] = hv(hh(cod.id_sq_v(a.comp[s]), b.at_h[k]),
                             hh(a.at_h[k], cod.id_sq_v(b.comp[y])))
        at_v = {u: hh(a.at_v[u], b.at_v[u]) for u in dom.vcells}
    else:
        comp = {x: cod.vcomp(a.comp[x], b.comp[x]) for x in dom.objects}
        at_h = {k: hv(a.at_h[k], b.at_h[k]) for k in dom.hcells}
        at_v = {}
        for u, (s, y) in dom.vcells.items():
            if a.kind == "v-lax":
                at_v[u] = hh(hv(cod.id_sq_h(a.comp[s]), b.at_v[u]),
                             hv(a.at_v[u], cod.id_sq_h(b.comp[y])))
            else:
                at_v[u] = hh(hv(a.at_v[u], cod.id_sq_h(b.comp[y])),
                             hv(cod.id_sq_h(a.comp[s]), b.at_v[u]))
    return DblTransformation(a.kind, f, h, comp, at_h, at_v)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def enumerate_transformations(f: DblFunctor, g: DblFunctor, kind: str
                              ) -> list[DblTransformation]:
    """All transformations of the given kind from f to g, canonical order."""
    from itertools import product as iproduct
    dom, cod = f.dom, f.cod
    obs = sorted(dom.objects)
    if kind in H_KINDS:
        comp_cand = [sorted(c for c, btr in cod.hcells.items()
                            if btr == (f.ob[x], g.ob[x])) for x in obs]
    else:
        comp_cand = [sorted(c for c, btr in cod.vcells.items()
                            if btr == (f.ob[x], g.ob[x])) for x in obs]
    results = []
    for combo in iproduct(*comp_cand):
        comp = dict(zip(obs, combo))
        hcand = []
        hkeys = sorted(dom.hcells)
        vkeys = sorted(dom.vcells)
        ok = True
        for k in hkeys:
            s, y = dom.hcells[k]
            if kind in H_KINDS:
                upper = cod.hcomp(f.h[k], comp[y])
                lower = cod.hcomp(comp[s], g.h[k])
                top, bottom = ((upper, lower) if kind == "h-oplax"
                               else (lower, upper))
                cs = cod.globular_squares(top, bottom)
            else:
                want = (f.h[k], g.h[k], comp[s], comp[y])
                cs = [q for q, fr in cod.squares.items()
                      if fr.as_tuple() == want]
            if not cs:
                ok = False
                break
            hcand.append(sorted(cs))
        if not ok:
            continue
        vcand = []
        for u in vkeys:
            s, y = dom.vcells[u]
            if kind in H_KINDS:
                want = (comp[s], comp[y], f.v[u], g.v[u])
                cs = [q for q, fr in cod.squares.items()
                      if fr.as_tuple() == want]
            else:
                l_lax = cod.vcomp(comp[s], g.v[u])
                r_lax = cod.vcomp(f.v[u], comp[y])
                left, right = ((l_lax, r_lax) if kind == "v-lax"
                               else (r_lax, l_lax))
                cs = [q for q, fr in cod.squares.items()
                      if fr.left == left and fr.right == right
                      and cod.is_hid(fr.top) and cod.is_hid(fr.bottom)]
            if not cs:
                ok = False
                break
            vcand.append(sorted(cs))
        if not ok:
            continue
        for hcombo in iproduct(*hcand):
            for vcombo in iproduct(*vcand):
                t = DblTransformation(kind, f, g, comp,
                                      dict(zip(hkeys, hcombo)),
                                      dict(zip(vkeys, vcombo)))
                if check_transformation(t).ok:
                    results.append(t)
    uniq = {t.key(): t for t in results}
    return [uniq[k] for k in sorted(uniq)]
