"""The hom double category of functors, transformations and modifications.

``build_hom_dbl(B, C, (ftype, tkind))`` enumerates functors of the given
type as objects; horizontal 1-cells are the h-transformations of the kind
selected by ``tkind`` ("o-l": horizontal oplax with vertical lax, "l-o":
the flipped pair), vertical 1-cells the paired v-transformations, squares
the modifications.  The result carries lookup maps back to the enumerated
data and always passes the finite-category validator.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core.finite import FiniteDoubleCategory, Frame
from ..errors import SizeBoundExceeded, TypeTagError
from .functor import DblFunctor, enumerate_functors
from .modification import (DblModification, ModFrame,
                           enumerate_modifications)
from .transform import (DblTransformation, enumerate_transformations,
                        identity_transformation, vcompose_transformations)

TKINDS = {"o-l": ("h-oplax", "v-lax"), "l-o": ("h-lax", "v-oplax")}


@dataclass
class HomDouble:
    """A finite double category plus the data each cell name stands for."""

    cat: FiniteDoubleCategory
    functors: dict[str, DblFunctor]
    htransf: dict[str, DblTransformation]
    vtransf: dict[str, DblTransformation]
    modifs: dict[str, DblModification]

    def functor_name(self, f: DblFunctor) -> str:
        for n, x in self.functors.items():
            if x.key() == f.key():
                return n
        raise KeyError("functor not an object of the hom category")

    def htransf_name(self, t: DblTransformation) -> str:
        for n, x in self.htransf.items():
            if x.key() == t.key():
                return n
        raise KeyError("transformation not a cell of the hom category")

    def vtransf_name(self, t: DblTransformation) -> str:
        for n, x in self.vtransf.items():
            if x.key() == t.key():
                return n
        raise KeyError("transformation not a cell of the hom category")

    def modif_name(self, m: DblModification) -> str:
        for n, x in self.modifs.items():
            if x.key() == m.key():
                return n
        raise KeyError("modification not a cell of the hom category")


def build_hom_dbl(dom: FiniteDoubleCategory, cod: FiniteDoubleCategory,
                  typespec: tuple[str, str] = ("lax", "o-l"),
                  size_cap: int = 4000) -> HomDouble:
    ftype, tkind = typespec
    if tkind not in TKINDS:
        raise TypeTagError(tkind)
    hkind, vkind = TKINDS[tkind]

    functors = enumerate_functors(dom, cod, ftype)
    if len(functors) > size_cap:
        raise SizeBoundExceeded(f"{len(functors)} functors exceeds cap")
    fname = {f.key(): f"F{i}" for i, f in enumerate(functors)}

    hts: list[DblTransformation] = []
    vts: list[DblTransformation] = []
    for f in functors:
        for g in functors:
            hts.extend(enumerate_transformations(f, g, hkind))
            vts.extend(enumerate_transformations(f, g, vkind))
            if len(hts) + len(vts) > size_cap * 8:
                raise SizeBoundExceeded("transformation count exceeds cap")
    hname = {t.key(): f"a{i}" for i, t in enumerate(hts)}
    vname = {t.key(): f"u{i}" for i, t in enumerate(vts)}

    mods: list[DblModification] = []
    for top in hts:
        for bottom in hts:
            for left in vts:
                if (left.src.key() != top.src.key()
                        or left.tgt.key() != bottom.src.key()):
                    continue
                for right in vts:
                    if (right.src.key() != top.tgt.key()
                            or right.tgt.key() != bottom.tgt.key()):
                        continue
                    fr = ModFrame(top, bottom, left, right)
                    mods.extend(enumerate_modifications(fr))
        if len(mods) > size_cap * 16:
            raise SizeBoundExceeded("modification count exceeds cap")
    mname = {m.key(): f"m{i}" for i, m in enumerate(mods)}

    objects = tuple(fname[f.key()] for f in functors)
    hcells = {hname[t.key()]: (fname[t.src.key()], fname[t.tgt.key()])
              for t in hts}
    vcells = {vname[t.key()]: (fname[t.src.key()], fname[t.tgt.key()])
              for t in vts}
    squares = {}
    for m in mods:
        squares[mname[m.key()]] = Frame(
            hname[m.frame.top.key()], hname[m.frame.bottom.key()],
            vname[m.frame.left.key()], vname[m.frame.right.key()])

    hid = {}
    vid = {}
    for f in functors:
        hid[fname[f.key()]] = hname[identity_transformation(f, hkind).key()]
        vid[fname[f.key()]] = vname[identity_transformation(f, vkind).key()]

    hcomp = {}
    for a in hts:
        for b in hts:
            if a.tgt.key() != b.src.key():
                continue
            hcomp[(hname[a.key()], hname[b.key()])] = \
                hname[vcompose_transformations(a, b).key()]
    vcomp = {}
    for a in vts:
        for b in vts:
            if a.tgt.key() != b.src.key():
                continue
            vcomp[(vname[a.key()], vname[b.key()])] = \
                vname[vcompose_transformations(a, b).key()]

    sq_vid = {}
    sq_hid = {}
    cod_cat = None  # assembled below

    def mod_key_of(comp, top, bottom, left, right):
        return (top.key(), bottom.key(), left.key(), right.key(),
                tuple(sorted(comp.items())))

    mkey_index = {m.key(): mname[m.key()] for m in mods}

    for t in hts:
        f = t.src
        ccat = f.cod
        comp = {x: ccat.id_sq_v(t.comp[x]) for x in f.dom.objects}
        left = identity_transformation(f, vkind)
        right = identity_transformation(t.tgt, vkind)
        sq_vid[hname[t.key()]] = mkey_index[
            mod_key_of(comp, t, t, left, right)]
    for t in vts:
        f = t.src
        ccat = f.cod
        comp = {x: ccat.id_sq_h(t.comp[x]) for x in f.dom.objects}
        top = identity_transformation(f, hkind)
        bottom = identity_transformation(t.tgt, hkind)
        sq_hid[vname[t.key()]] = mkey_index[
            mod_key_of(comp, top, bottom, t, t)]

    base = dom  # where components live: dom of the functors
    sq_hcomp = {}
    sq_vcomp = {}
    for m1 in mods:
        for m2 in mods:
            # horizontal: m1's right v-transformation equals m2's left
            if m1.frame.right.key() == m2.frame.left.key():
                top = vcompose_transformations(m1.frame.top, m2.frame.top)
                bottom = vcompose_transformations(m1.frame.bottom,
                                                  m2.frame.bottom)
                ccat = m1.frame.top.src.cod
                comp = {x: ccat.sq_hcomp(m1.comp[x], m2.comp[x])
                        for x in base.objects}
                sq_hcomp[(mname[m1.key()], mname[m2.key()])] = mkey_index[
                    mod_key_of(comp, top, bottom, m1.frame.left,
                               m2.frame.right)]
            # vertical: m1's bottom h-transformation equals m2's top
            if m1.frame.bottom.key() == m2.frame.top.key():
                left = vcompose_transformations(m1.frame.left,
                                                m2.frame.left)
                right = vcompose_transformations(m1.frame.right,
                                                 m2.frame.right)
                ccat = m1.frame.top.src.cod
                comp = {x: ccat.sq_vcomp(m1.comp[x], m2.comp[x])
                        for x in base.objects}
                sq_vcomp[(mname[m1.key()], mname[m2.key()])] = mkey_index[
                    mod_key_of(comp, m1.frame.top, m2.frame.bottom,
                               left, right)]

    cat = FiniteDoubleCategory(
        name=f"hom({dom.name},{cod.name};{ftype},{tkind})",
        objects=objects, hcells=hcells, vcells=vcells, squares=squares,
        hid=hid, vid=vid, hcomp_table=hcomp, vcomp_table=vcomp,
        sq_hcomp_table=sq_hcomp, sq_vcomp_table=sq_vcomp,
        sq_vid=sq_vid, sq_hid=sq_hid)
    return HomDouble(cat,
                     {fname[f.key()]: f for f in functors},
                     {hname[t.key()]: t for t in hts},
                     {vname[t.key()]: t for t in vts},
                     {mname[m.key()]: m for m in mods})
