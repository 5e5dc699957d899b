"""Binary quasi-functors of double categories.

The data is two families of one-variable functors agreeing on objects plus
four families of structure squares indexed by pairs of 1-cells (one from
each variable).  The checker realises the characterisation through the
transformation layer: slicing at a horizontal 1-cell of either variable
must give a horizontal transformation (oplax on one side, lax on the
other), slicing at a vertical 1-cell a vertical transformation, slicing at
a square a modification, and the functor structure of either family must
assemble into compositor/unitor modifications.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from ..core.finite import FiniteDoubleCategory
from ..dbl.functor import DblFunctor, check_functor, enumerate_functors
from ..dbl.modification import DblModification, ModFrame, check_modification
from ..dbl.transform import (DblTransformation, check_transformation,
                             identity_transformation,
                             vcompose_transformations)
from ..errors import CheckFailedError, SizeBoundExceeded, TypeTagError
from ..report import Report
from .typespec import TypeSpec


@dataclass
class QuasiFunctor2:
    ts: TypeSpec
    cat1: FiniteDoubleCategory
    cat2: FiniteDoubleCategory
    cod: FiniteDoubleCategory
    f1: dict[str, DblFunctor]  # per object of cat1: H(A,-): cat2 -> cod
    f2: dict[str, DblFunctor]  # per object of cat2: H(-,B): cat1 -> cod
    hh: dict[tuple[str, str], str] = field(default_factory=dict)
    hv: dict[tuple[str, str], str] = field(default_factory=dict)
    vh: dict[tuple[str, str], str] = field(default_factory=dict)
    vv: dict[tuple[str, str], str] = field(default_factory=dict)

    def key(self):
        return (self.ts, tuple(sorted((a, f.key())
                                      for a, f in self.f1.items())),
                tuple(sorted((b, f.key()) for b, f in self.f2.items())),
                tuple(sorted(self.hh.items())),
                tuple(sorted(self.hv.items())),
                tuple(sorted(self.vh.items())),
                tuple(sorted(self.vv.items())))

    def __eq__(self, other):
        return isinstance(other, QuasiFunctor2) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    # -- cell access -------------------------------------------------------

    def at(self, a: str, b: str) -> str:
        """Object value H(a, b)."""
        return self.f1[a].ob[b]

    def cell1(self, dim: str, x: str, b: str) -> str:
        """H(x, b) for a cat1 cell x and a cat2 object b."""
        return self.f2[b].apply(dim, x)

    def cell2(self, a: str, dim: str, y: str) -> str:
        """H(a, y) for a cat1 object a and a cat2 cell y."""
        return self.f1[a].apply(dim, y)

    # -- slices ------------------------------------------------------------

    def hkinds(self) -> tuple[str, str]:
        """(kind of (-,K)-slices, kind of (k,-)-slices)."""
        if self.ts.tkind in ("o-l", "ps", "st"):
            return ("h-oplax", "h-lax")
        return ("h-lax", "h-oplax")

    def vkinds(self) -> tuple[str, str]:
        if self.ts.tkind in ("o-l", "ps", "st"):
            return ("v-lax", "v-oplax")
        return ("v-oplax", "v-lax")

    def slice_h1(self, bigk: str) -> DblTransformation:
        """The transformation between f1-functors induced by K in cat1."""
        a, a2 = self.cat1.hcells[bigk]
        return DblTransformation(
            self.hkinds()[0], self.f1[a], self.f1[a2],
            {b: self.f2[b].h[bigk] for b in self.cat2.objects},
            {k: self.hh[(bigk, k)] for k in self.cat2.hcells},
            {u: self.hv[(bigk, u)] for u in self.cat2.vcells})

    def slice_v1(self, bigu: str) -> DblTransformation:
        a, a2 = self.cat1.vcells[bigu]
        return DblTransformation(
            self.vkinds()[0], self.f1[a], self.f1[a2],
            {b: self.f2[b].v[bigu] for b in self.cat2.objects},
            {k: self.vh[(bigu, k)] for k in self.cat2.hcells},
            {u: self.vv[(bigu, u)] for u in self.cat2.vcells})

    def slice_sq1(self, zeta: str) -> DblModification:
        fr = self.cat1.frame(zeta)
        frame = ModFrame(self.slice_h1(fr.top), self.slice_h1(fr.bottom),
                         self.slice_v1(fr.left), self.slice_v1(fr.right))
        return DblModification(
            frame, {b: self.f2[b].sq[zeta] for b in self.cat2.objects})

    def slice_h2(self, k: str) -> DblTransformation:
        b, b2 = self.cat2.hcells[k]
        return DblTransformation(
            self.hkinds()[1], self.f2[b], self.f2[b2],
            {a: self.f1[a].h[k] for a in self.cat1.objects},
            {bigk: self.hh[(bigk, k)] for bigk in self.cat1.hcells},
            {bigu: self.vh[(bigu, k)] for bigu in self.cat1.vcells})

    def slice_v2(self, u: str) -> DblTransformation:
        b, b2 = self.cat2.vcells[u]
        return DblTransformation(
            self.vkinds()[1], self.f2[b], self.f2[b2],
            {a: self.f1[a].v[u] for a in self.cat1.objects},
            {bigk: self.hv[(bigk, u)] for bigk in self.cat1.hcells},
            {bigu: self.vv[(bigu, u)] for bigu in self.cat1.vcells})

    def slice_sq2(self, omega: str) -> DblModification:
        fr = self.cat2.frame(omega)
        frame = ModFrame(self.slice_h2(fr.top), self.slice_h2(fr.bottom),
                         self.slice_v2(fr.left), self.slice_v2(fr.right))
        return DblModification(
            frame, {a: self.f1[a].sq[omega] for a in self.cat1.objects})


def coerce_kind(f: DblFunctor, kind: str) -> DblFunctor:
    """Relabel a strict functor as a weaker type (identity structure)."""
    if f.kind == kind:
        return f
    if f.kind != "strict":
        raise TypeTagError(f"cannot relabel {f.kind} functor as {kind}")
    out = DblFunctor(kind, f.dom, f.cod, dict(f.ob), dict(f.h), dict(f.v),
                     dict(f.sq), dict(f.hcomp_cell), dict(f.hunit_cell))
    return out


# ---------------------------------------------------------------------------
# Checker
# ---------------------------------------------------------------------------


def check_quasi2(h: QuasiFunctor2, ts: TypeSpec | None = None) -> Report:
    ts = ts or h.ts
    rep = Report("quasi2",
                 f"{h.cat1.name}x{h.cat2.name}->{h.cod.name}:{ts.short()}")
    if ts.arity != 2:
        raise TypeTagError("binary checker on non-binary type spec")

    # families: right kinds, valid functors, object agreement
    for a in h.cat1.objects:
        f = h.f1.get(a)
        if f is None or f.kind != ts.var_types[1]:
            rep.fail("family-kind", ("f1", a), "missing or wrong type")
            continue
        rep.merge(check_functor(f))
    for b in h.cat2.objects:
        f = h.f2.get(b)
        if f is None or f.kind != ts.var_types[0]:
            rep.fail("family-kind", ("f2", b), "missing or wrong type")
            continue
        rep.merge(check_functor(f))
    if not rep.ok:
        return rep
    for a in h.cat1.objects:
        for b in h.cat2.objects:
            rep.require("object-agreement", (a, b),
                        h.f1[a].ob[b], h.f2[b].ob[a])
    if not rep.ok:
        return rep

    # slices are transformations / modifications of the right kinds
    for bigk in h.cat1.hcells:
        rep.merge(check_transformation(h.slice_h1(bigk)))
    for bigu in h.cat1.vcells:
        rep.merge(check_transformation(h.slice_v1(bigu)))
    for zeta in h.cat1.squares:
        rep.merge(check_modification(h.slice_sq1(zeta)))
    for k in h.cat2.hcells:
        rep.merge(check_transformation(h.slice_h2(k)))
    for u in h.cat2.vcells:
        rep.merge(check_transformation(h.slice_v2(u)))
    for omega in h.cat2.squares:
        rep.merge(check_modification(h.slice_sq2(omega)))
    if not rep.ok:
        return rep

    # functoriality of slicing in both variables
    _side_functorial(h, rep, first=True)
    _side_functorial(h, rep, first=False)

    if ts.tkind == "st":
        for table in (h.hh, h.vv):
            for idx, cell in table.items():
                deg = (h.cod.is_sq_vid(cell) if table is h.hh
                       else h.cod.is_sq_hid(cell))
                rep.require("strict-cells", idx, deg, True)
    if ts.tkind == "ps":
        from ..dbl.functor import _vert_invertible
        for idx, cell in h.hh.items():
            rep.require("invertible-hh", idx,
                        _vert_invertible(h.cod, cell), True)
    return rep


def _side_functorial(h: QuasiFunctor2, rep: Report, first: bool) -> None:
    """Compositors/unitors of one family are modifications for the other."""
    cat = h.cat1 if first else h.cat2
    other = h.cat2 if first else h.cat1
    fam = h.f2 if first else h.f1  # functors supplying the components
    slice_h = h.slice_h1 if first else h.slice_h2
    slice_v = h.slice_v1 if first else h.slice_v2
    vk = h.vkinds()[0] if first else h.vkinds()[1]
    tag = "var1" if first else "var2"

    for (k1, k2), k12 in cat.hcomp_table.items():
        top = vcompose_transformations(slice_h(k1), slice_h(k2))
        bottom = slice_h(k12)
        left = identity_transformation(top.src, vk)
        right = identity_transformation(top.tgt, vk)
        comp = {x: fam[x].hcomp_cell[(k1, k2)] for x in other.objects}
        m = DblModification(ModFrame(top, bottom, left, right), comp)
        sub = check_modification(m)
        rep.count(sub.instances_checked)
        for fl in sub.failures:
            rep.fail(f"{tag}-compositor", (k1, k2),
                     f"{fl.axiom}@{fl.instance}")
    for a in cat.objects:
        idt = identity_transformation(
            h.f1[a] if first else h.f2[a], slice_h(cat.id_h(a)).kind)
        bottom = slice_h(cat.id_h(a))
        left = identity_transformation(idt.src, vk)
        right = identity_transformation(idt.src, vk)
        comp = {x: fam[x].hunit_cell[a] for x in other.objects}
        m = DblModification(ModFrame(idt, bottom, left, right), comp)
        sub = check_modification(m)
        rep.count(sub.instances_checked)
        for fl in sub.failures:
            rep.fail(f"{tag}-unitor", (a,), f"{fl.axiom}@{fl.instance}")
    # the vertical direction is strict
    for (u1, u2), u12 in cat.vcomp_table.items():
        got = vcompose_transformations(slice_v(u1), slice_v(u2))
        rep.require(f"{tag}-v-strict", (u1, u2),
                    got.key(), slice_v(u12).key())
    for a in cat.objects:
        idv = identity_transformation(h.f1[a] if first else h.f2[a], vk)
        rep.require(f"{tag}-v-id", (a,),
                    slice_v(cat.id_v(a)).key(), idv.key())


# ---------------------------------------------------------------------------
# Flip of variables
# ---------------------------------------------------------------------------

_FLIP_TK = {"o-l": "l-o", "l-o": "o-l", "ps": "ps", "st": "st"}


def flip_quasi(h: QuasiFunctor2) -> QuasiFunctor2:
    ts = TypeSpec((h.ts.var_types[1], h.ts.var_types[0]),
                  _FLIP_TK[h.ts.tkind])
    return QuasiFunctor2(
        ts, h.cat2, h.cat1, h.cod, dict(h.f2), dict(h.f1),
        hh={(k, bigk): c for (bigk, k), c in h.hh.items()},
        hv={(k, bigu): c for (bigu, k), c in h.vh.items()},
        vh={(u, bigk): c for (bigk, u), c in h.hv.items()},
        vv={(u, bigu): c for (bigu, u), c in h.vv.items()})


# ---------------------------------------------------------------------------
# Bijection with functors into the hom double category
# ---------------------------------------------------------------------------


def quasi_from_functor(f: DblFunctor, hom) -> QuasiFunctor2:
    """Read a quasi-functor off a functor into ``build_hom_dbl`` output."""
    cat1, cod = f.dom, None
    ftype, tkind = hom.typespec
    some = next(iter(hom.functors.values()))
    cat2, cod = some.dom, some.cod
    f1 = {}
    for a in cat1.objects:
        f1[a] = hom.functors[f.ob[a]]
    f2 = {}
    for b in cat2.objects:
        f2[b] = DblFunctor(
            f.kind, cat1, cod,
            {a: hom.functors[f.ob[a]].ob[b] for a in cat1.objects},
            {k: hom.htransf[f.h[k]].comp[b] for k in cat1.hcells},
            {u: hom.vtransf[f.v[u]].comp[b] for u in cat1.vcells},
            {s: hom.modifs[f.sq[s]].comp[b] for s in cat1.squares},
            {pair: hom.modifs[c].comp[b]
             for pair, c in f.hcomp_cell.items()},
            {x: hom.modifs[c].comp[b] for x, c in f.hunit_cell.items()})
    hh = {(bigk, k): hom.htransf[f.h[bigk]].at_h[k]
          for bigk in cat1.hcells for k in cat2.hcells}
    hv = {(bigk, u): hom.htransf[f.h[bigk]].at_v[u]
          for bigk in cat1.hcells for u in cat2.vcells}
    vh = {(bigu, k): hom.vtransf[f.v[bigu]].at_h[k]
          for bigu in cat1.vcells for k in cat2.hcells}
    vv = {(bigu, u): hom.vtransf[f.v[bigu]].at_v[u]
          for bigu in cat1.vcells for u in cat2.vcells}
    ts = TypeSpec((f.kind, ftype), tkind)
    return QuasiFunctor2(ts, cat1, cat2, cod, f1, f2, hh, hv, vh, vv)


def functor_from_quasi(h: QuasiFunctor2, hom) -> DblFunctor:
    """Inverse of :func:`quasi_from_functor`; the input must check out."""
    rep = check_quasi2(h)
    if not rep.ok:
        raise CheckFailedError("quasi-functor fails its checker", rep)
    cat1 = h.cat1
    ob = {a: hom.functor_name(h.f1[a]) for a in cat1.objects}
    hmap = {k: hom.htransf_name(h.slice_h1(k)) for k in cat1.hcells}
    vmap = {u: hom.vtransf_name(h.slice_v1(u)) for u in cat1.vcells}
    sqmap = {s: hom.modif_name(h.slice_sq1(s)) for s in cat1.squares}
    comp = {}
    for (k1, k2) in cat1.hcomp_table:
        top = vcompose_transformations(h.slice_h1(k1), h.slice_h1(k2))
        bottom = h.slice_h1(cat1.hcomp_table[(k1, k2)])
        vk = h.vkinds()[0]
        m = DblModification(
            ModFrame(top, bottom,
                     identity_transformation(top.src, vk),
                     identity_transformation(top.tgt, vk)),
            {b: h.f2[b].hcomp_cell[(k1, k2)] for b in h.cat2.objects})
        comp[(k1, k2)] = hom.modif_name(m)
    unit = {}
    for a in cat1.objects:
        hk = h.slice_h1(cat1.id_h(a)).kind
        vk = h.vkinds()[0]
        idt = identity_transformation(h.f1[a], hk)
        m = DblModification(
            ModFrame(idt, h.slice_h1(cat1.id_h(a)),
                     identity_transformation(h.f1[a], vk),
                     identity_transformation(h.f1[a], vk)),
            {b: h.f2[b].hunit_cell[a] for b in h.cat2.objects})
        unit[a] = hom.modif_name(m)
    return DblFunctor(h.ts.var_types[0], cat1, hom.cat, ob, hmap, vmap,
                      sqmap, comp, unit)


# ---------------------------------------------------------------------------
# Enumeration oracle
# ---------------------------------------------------------------------------


def enumerate_quasi2(cat1, cat2, cod, ts: TypeSpec,
                     node_cap: int = 2_000_000) -> list[QuasiFunctor2]:
    """All binary quasi-functors of the given type, canonical order."""
    nodes = 0

    def bump(n=1):
        nonlocal nodes
        nodes += n
        if nodes > node_cap:
            raise SizeBoundExceeded("quasi-functor search exceeded cap")

    f2_all = enumerate_functors(cat1, cod, ts.var_types[0])
    f1_all = enumerate_functors(cat2, cod, ts.var_types[1])
    f1_by_ob: dict[tuple, list[DblFunctor]] = {}
    for f in f1_all:
        keyed = tuple(sorted(f.ob.items()))
        f1_by_ob.setdefault(keyed, []).append(f)

    out: list[QuasiFunctor2] = []
    obs1 = sorted(cat1.objects)
    obs2 = sorted(cat2.objects)

    for f2combo in iproduct(f2_all, repeat=len(obs2)):
        bump()
        f2 = dict(zip(obs2, f2combo))
        want = {a: tuple(sorted((b, f2[b].ob[a]) for b in obs2))
                for a in obs1}
        cand1 = []
        ok = True
        for a in obs1:
            cs = [f for f in f1_all
                  if tuple(sorted(f.ob.items())) == want[a]]
            if not cs:
                ok = False
                break
            cand1.append(cs)
        if not ok:
            continue
        for f1combo in iproduct(*cand1):
            bump()
            f1 = dict(zip(obs1, f1combo))
            for h in _cell_choices(cat1, cat2, cod, ts, f1, f2, bump):
                if check_quasi2(h).ok:
                    out.append(h)
    uniq = {h.key(): h for h in out}
    return [uniq[k] for k in sorted(uniq, key=repr)]


def _cell_choices(cat1, cat2, cod, ts, f1, f2, bump):
    oplax_first = ts.tkind in ("o-l", "ps", "st")

    hh_keys = [(bk, k) for bk in sorted(cat1.hcells)
               for k in sorted(cat2.hcells)]
    hh_cand = []
    for (bigk, k) in hh_keys:
        a, a2 = cat1.hcells[bigk]
        b, b2 = cat2.hcells[k]
        upper = cod.hcomp(f1[a].h[k], f2[b2].h[bigk])
        lower = cod.hcomp(f2[b].h[bigk], f1[a2].h[k])
        top, bottom = (upper, lower) if oplax_first else (lower, upper)
        cs = cod.globular_squares(top, bottom)
        if not cs:
            return
        hh_cand.append(cs)

    hv_keys = [(bk, u) for bk in sorted(cat1.hcells)
               for u in sorted(cat2.vcells)]
    hv_cand = []
    for (bigk, u) in hv_keys:
        a, a2 = cat1.hcells[bigk]
        b, b2 = cat2.vcells[u]
        want = (f2[b].h[bigk], f2[b2].h[bigk], f1[a].v[u], f1[a2].v[u])
        cs = sorted(q for q, fr in cod.squares.items()
                    if fr.as_tuple() == want)
        if not cs:
            return
        hv_cand.append(cs)

    vh_keys = [(bu, k) for bu in sorted(cat1.vcells)
               for k in sorted(cat2.hcells)]
    vh_cand = []
    for (bigu, k) in vh_keys:
        a, a2 = cat1.vcells[bigu]
        b, b2 = cat2.hcells[k]
        want = (f1[a].h[k], f1[a2].h[k], f2[b].v[bigu], f2[b2].v[bigu])
        cs = sorted(q for q, fr in cod.squares.items()
                    if fr.as_tuple() == want)
        if not cs:
            return
        vh_cand.append(cs)

    vv_keys = [(bu, u) for bu in sorted(cat1.vcells)
               for u in sorted(cat2.vcells)]
    vv_cand = []
    for (bigu, u) in vv_keys:
        a, a2 = cat1.vcells[bigu]
        b, b2 = cat2.vcells[u]
        l_lax = cod.vcomp(f2[b].v[bigu], f1[a2].v[u])
        r_lax = cod.vcomp(f1[a].v[u], f2[b2].v[bigu])
        left, right = (l_lax, r_lax) if oplax_first else (r_lax, l_lax)
        cs = sorted(q for q, fr in cod.squares.items()
                    if fr.left == left and fr.right == right
                    and cod.is_hid(fr.top) and cod.is_hid(fr.bottom))
        if not cs:
            return
        vv_cand.append(cs)

    for hhc in iproduct(*hh_cand):
        for hvc in iproduct(*hv_cand):
            for vhc in iproduct(*vh_cand):
                for vvc in iproduct(*vv_cand):
                    bump()
                    yield QuasiFunctor2(
                        ts, cat1, cat2, cod, dict(f1), dict(f2),
                        dict(zip(hh_keys, hhc)), dict(zip(hv_keys, hvc)),
                        dict(zip(vh_keys, vhc)), dict(zip(vv_keys, vvc)))
