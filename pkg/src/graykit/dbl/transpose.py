"""Transpose duality: reverse both 1-cell directions.

A square's frame rotates half a turn (top and bottom swap, left and right
swap); composition tables read backwards.  Lax functors transport to lax
functors on the transposes, horizontal oplax transformations become
horizontal lax ones (and vice versa), vertical lax become vertical oplax.
"""

from __future__ import annotations

from ..core.finite import FiniteDoubleCategory, Frame
from ..report import Report
from .functor import DblFunctor
from .hom import build_hom_dbl
from .modification import DblModification, ModFrame
from .transform import DblTransformation

_KIND_FLIP = {"h-oplax": "h-lax", "h-lax": "h-oplax",
              "v-lax": "v-oplax", "v-oplax": "v-lax"}


def transpose(cat: FiniteDoubleCategory) -> FiniteDoubleCategory:
    return FiniteDoubleCategory(
        name=f"{cat.name}^t" if not cat.name.endswith("^t")
        else cat.name[:-2],
        objects=cat.objects,
        hcells={f: (t, s) for f, (s, t) in cat.hcells.items()},
        vcells={u: (t, s) for u, (s, t) in cat.vcells.items()},
        squares={q: Frame(fr.bottom, fr.top, fr.right, fr.left)
                 for q, fr in cat.squares.items()},
        hid=dict(cat.hid), vid=dict(cat.vid),
        hcomp_table={(g, f): fg for (f, g), fg in cat.hcomp_table.items()},
        vcomp_table={(w, u): uw for (u, w), uw in cat.vcomp_table.items()},
        sq_hcomp_table={(b, a): ab
                        for (a, b), ab in cat.sq_hcomp_table.items()},
        sq_vcomp_table={(b, a): ab
                        for (a, b), ab in cat.sq_vcomp_table.items()},
        sq_vid=dict(cat.sq_vid), sq_hid=dict(cat.sq_hid))


def transpose_functor(f: DblFunctor, dom_t: FiniteDoubleCategory,
                      cod_t: FiniteDoubleCategory) -> DblFunctor:
    return DblFunctor(
        f.kind, dom_t, cod_t, dict(f.ob), dict(f.h), dict(f.v), dict(f.sq),
        {(b, a): c for (a, b), c in f.hcomp_cell.items()},
        dict(f.hunit_cell))


def transpose_transformation(t: DblTransformation,
                             src_t: DblFunctor,
                             tgt_t: DblFunctor) -> DblTransformation:
    """The transported transformation; kind flips, source and target swap."""
    return DblTransformation(
        _KIND_FLIP[t.kind], tgt_t, src_t,
        dict(t.comp), dict(t.at_h), dict(t.at_v))


def verity_iso_check(a: FiniteDoubleCategory, b: FiniteDoubleCategory,
                     ftype: str = "lax",
                     size_cap: int = 4000) -> Report:
    """Exhibit the duality bijection between the two hom categories.

    Builds the hom of type (ftype, o-l) on (a, b) and the transpose of the
    hom of type (ftype, l-o) on the transposes, maps every cell across by
    transporting its data, and verifies the map is a bijection commuting
    with all four composition tables in both directions.
    """
    rep = Report("verity-duality", f"{a.name},{b.name}")
    left = build_hom_dbl(a, b, (ftype, "o-l"), size_cap)
    at, bt = transpose(a), transpose(b)
    right_raw = build_hom_dbl(at, bt, (ftype, "l-o"), size_cap)
    right = transpose(right_raw.cat)

    # map each left object (functor a->b) to its transpose in right_raw
    ob_map: dict[str, str] = {}
    for n, f in left.functors.items():
        ft = transpose_functor(f, at, bt)
        ob_map[n] = right_raw.functor_name(ft)
    rep.require("objects-bijective", (),
                sorted(ob_map.values()), sorted(right.objects))

    h_map: dict[str, str] = {}
    for n, t in left.htransf.items():
        tt = transpose_transformation(
            t, transpose_functor(t.src, at, bt),
            transpose_functor(t.tgt, at, bt))
        h_map[n] = right_raw.htransf_name(tt)
    rep.require("hcells-bijective", (),
                sorted(h_map.values()), sorted(right.hcells))

    v_map: dict[str, str] = {}
    for n, t in left.vtransf.items():
        tt = transpose_transformation(
            t, transpose_functor(t.src, at, bt),
            transpose_functor(t.tgt, at, bt))
        v_map[n] = right_raw.vtransf_name(tt)
    rep.require("vcells-bijective", (),
                sorted(v_map.values()), sorted(right.vcells))

    s_map: dict[str, str] = {}
    for n, m in left.modifs.items():
        fr = m.frame
        tt = ModFrame(
            transpose_transformation(
                fr.bottom, transpose_functor(fr.bottom.src, at, bt),
                transpose_functor(fr.bottom.tgt, at, bt)),
            transpose_transformation(
                fr.top, transpose_functor(fr.top.src, at, bt),
                transpose_functor(fr.top.tgt, at, bt)),
            transpose_transformation(
                fr.right, transpose_functor(fr.right.src, at, bt),
                transpose_functor(fr.right.tgt, at, bt)),
            transpose_transformation(
                fr.left, transpose_functor(fr.left.src, at, bt),
                transpose_functor(fr.left.tgt, at, bt)))
        mt = DblModification(tt, dict(m.comp))
        s_map[n] = right_raw.modif_name(mt)
    rep.require("squares-bijective", (),
                sorted(s_map.values()), sorted(right.squares))
    if not rep.ok:
        return rep

    lc = left.cat
    # the transported map is a strict double functor in both directions
    for (f, g), fg in lc.hcomp_table.items():
        rep.require("h-comp-preserved", (f, g),
                    right.hcomp_table.get((h_map[f], h_map[g])), h_map[fg])
    for (u, w), uw in lc.vcomp_table.items():
        rep.require("v-comp-preserved", (u, w),
                    right.vcomp_table.get((v_map[u], v_map[w])), v_map[uw])
    for (m1, m2), m3 in lc.sq_hcomp_table.items():
        rep.require("sq-h-preserved", (m1, m2),
                    right.sq_hcomp_table.get((s_map[m1], s_map[m2])),
                    s_map[m3])
    for (m1, m2), m3 in lc.sq_vcomp_table.items():
        rep.require("sq-v-preserved", (m1, m2),
                    right.sq_vcomp_table.get((s_map[m1], s_map[m2])),
                    s_map[m3])
    for x in lc.objects:
        rep.require("h-id-preserved", (x,),
                    right.hid.get(ob_map[x]), h_map[lc.hid[x]])
        rep.require("v-id-preserved", (x,),
                    right.vid.get(ob_map[x]), v_map[lc.vid[x]])
    return rep
