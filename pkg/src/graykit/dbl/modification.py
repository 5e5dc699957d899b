"""Modifications filling a frame of four transformations.

The frame holds two horizontal transformations (top, bottom) and two
vertical ones (left, right); a modification is a family of squares indexed
by objects, subject to one axiom per horizontal generator and one per
vertical generator.  Frames are stored explicitly rather than inferred.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import FrameMismatchError
from ..report import Report
from .transform import DblTransformation


@dataclass
class ModFrame:
    top: DblTransformation     # h-kind, F => G
    bottom: DblTransformation  # h-kind, F' => G'
    left: DblTransformation    # v-kind, F => F'
    right: DblTransformation   # v-kind, G => G'

    def validate(self) -> None:
        if self.top.kind not in ("h-oplax", "h-lax") \
                or self.bottom.kind != self.top.kind:
            raise FrameMismatchError("top/bottom must share an h-kind")
        if self.left.kind not in ("v-lax", "v-oplax") \
                or self.right.kind != self.left.kind:
            raise FrameMismatchError("left/right must share a v-kind")
        if (self.top.src.key() != self.left.src.key()
                or self.top.tgt.key() != self.right.src.key()
                or self.bottom.src.key() != self.left.tgt.key()
                or self.bottom.tgt.key() != self.right.tgt.key()):
            raise FrameMismatchError("corner functors do not match")


@dataclass
class DblModification:
    frame: ModFrame
    comp: dict[str, str]  # per-object square components

    def key(self):
        return (self.frame.top.key(), self.frame.bottom.key(),
                self.frame.left.key(), self.frame.right.key(),
                tuple(sorted(self.comp.items())))

    def __eq__(self, other):
        return (isinstance(other, DblModification)
                and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())


def identity_modification(t: DblTransformation) -> DblModification:
    """Identity modification on an h-transformation."""
    from .transform import identity_transformation
    f, g = t.src, t.tgt
    cod = f.cod
    fr = ModFrame(t, t, identity_transformation(f, "v-lax"),
                  identity_transformation(g, "v-lax"))
    comp = {x: cod.id_sq_v(t.comp[x]) for x in f.dom.objects}
    return DblModification(fr, comp)


def check_modification(m: DblModification,
                       frame: ModFrame | None = None) -> Report:
    fr = frame or m.frame
    fr.validate()
    rep = Report("modification", fr.top.kind + "/" + fr.left.kind)
    f = fr.top.src
    dom, cod = f.dom, f.cod
    hv, hh = cod.sq_vcomp, cod.sq_hcomp

    for x in dom.objects:
        cell = m.comp.get(x)
        ok = cell is not None and cell in cod.squares
        if ok:
            q = cod.frame(cell)
            ok = q.as_tuple() == (fr.top.comp[x], fr.bottom.comp[x],
                                  fr.left.comp[x], fr.right.comp[x])
        rep.require("component", (x,), ok, True)
    if not rep.ok:
        return rep

    oplax = fr.top.kind == "h-oplax"
    for k, (s, y) in dom.hcells.items():
        if oplax:
            lhs = hv(fr.top.at_h[k], hh(m.comp[s], fr.right.at_h[k]))
            rhs = hv(hh(fr.left.at_h[k], m.comp[y]), fr.bottom.at_h[k])
        else:
            lhs = hv(hh(m.comp[s], fr.right.at_h[k]), fr.bottom.at_h[k])
            rhs = hv(fr.top.at_h[k], hh(fr.left.at_h[k], m.comp[y]))
        rep.require("mod-h", (k,), lhs, rhs)
    vlax = fr.left.kind == "v-lax"
    for u, (s, y) in dom.vcells.items():
        if vlax:
            lhs = hh(hv(m.comp[s], fr.bottom.at_v[u]), fr.right.at_v[u])
            rhs = hh(fr.left.at_v[u], hv(fr.top.at_v[u], m.comp[y]))
        else:
            lhs = hh(fr.left.at_v[u], hv(m.comp[s], fr.bottom.at_v[u]))
            rhs = hh(hv(fr.top.at_v[u], m.comp[y]), fr.right.at_v[u])
        rep.require("mod-v", (u,), lhs, rhs)
    return rep


def enumerate_modifications(fr: ModFrame) -> list[DblModification]:
    from itertools import product as iproduct
    fr.validate()
    f = fr.top.src
    dom, cod = f.dom, f.cod
    obs = sorted(dom.objects)
    cand = []
    for x in obs:
        want = (fr.top.comp[x], fr.bottom.comp[x],
                fr.left.comp[x], fr.right.comp[x])
        cs = sorted(q for q, qfr in cod.squares.items()
                    if qfr.as_tuple() == want)
        if not cs:
            return []
        cand.append(cs)
    out = []
    for combo in iproduct(*cand):
        m = DblModification(fr, dict(zip(obs, combo)))
        if check_modification(m).ok:
            out.append(m)
    uniq = {m.key(): m for m in out}
    return [uniq[k] for k in sorted(uniq)]
