"""Fully tabulated finite double categories.

Cells are identified by name.  A category instance owns total composition
tables; every operation is a table lookup guarded by a boundary check, so a
malformed pasting fails immediately rather than producing garbage.

All instances are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..errors import BoundaryMismatchError, LawViolation


@dataclass(frozen=True)
class Frame:
    """Boundary of a square: top/bottom horizontal, left/right vertical."""

    top: str
    bottom: str
    left: str
    right: str

    def as_tuple(self):
        return (self.top, self.bottom, self.left, self.right)


@dataclass
class FiniteDoubleCategory:
    name: str
    objects: tuple[str, ...]
    hcells: dict[str, tuple[str, str]]
    vcells: dict[str, tuple[str, str]]
    squares: dict[str, Frame]
    hid: dict[str, str]
    vid: dict[str, str]
    hcomp_table: dict[tuple[str, str], str]
    vcomp_table: dict[tuple[str, str], str]
    sq_hcomp_table: dict[tuple[str, str], str]
    sq_vcomp_table: dict[tuple[str, str], str]
    sq_vid: dict[str, str]  # h-cell -> identity square for vertical pasting
    sq_hid: dict[str, str]  # v-cell -> identity square for horizontal pasting
    # canonical pasting term for each cell, filled by tabulation (optional)
    cell_terms: dict[tuple[str, str], object] = field(default_factory=dict)

    # -- lookups ---------------------------------------------------------

    def hsrc(self, f: str) -> str:
        return self.hcells[f][0]

    def htgt(self, f: str) -> str:
        return self.hcells[f][1]

    def vsrc(self, u: str) -> str:
        return self.vcells[u][0]

    def vtgt(self, u: str) -> str:
        return self.vcells[u][1]

    def frame(self, s: str) -> Frame:
        return self.squares[s]

    def id_h(self, x: str) -> str:
        return self.hid[x]

    def id_v(self, x: str) -> str:
        return self.vid[x]

    def id_sq_v(self, f: str) -> str:
        return self.sq_vid[f]

    def id_sq_h(self, u: str) -> str:
        return self.sq_hid[u]

    def unit_square(self, x: str) -> str:
        return self.sq_vid[self.hid[x]]

    # -- composition -----------------------------------------------------

    def hcomp(self, f: str, g: str) -> str:
        """f then g, diagram order."""
        if self.htgt(f) != self.hsrc(g):
            raise BoundaryMismatchError(f"hcomp {f} * {g}")
        return self.hcomp_table[(f, g)]

    def vcomp(self, u: str, w: str) -> str:
        """u above w."""
        if self.vtgt(u) != self.vsrc(w):
            raise BoundaryMismatchError(f"vcomp {u} / {w}")
        return self.vcomp_table[(u, w)]

    def sq_hcomp(self, a: str, b: str) -> str:
        """a left of b, sharing a's right edge with b's left edge."""
        if self.frame(a).right != self.frame(b).left:
            raise BoundaryMismatchError(f"sq hcomp {a} | {b}")
        return self.sq_hcomp_table[(a, b)]

    def sq_vcomp(self, a: str, b: str) -> str:
        """a above b, sharing a's bottom edge with b's top edge."""
        if self.frame(a).bottom != self.frame(b).top:
            raise BoundaryMismatchError(f"sq vcomp {a} / {b}")
        return self.sq_vcomp_table[(a, b)]

    def hcomp_many(self, fs: Iterable[str], at: str | None = None) -> str:
        fs = list(fs)
        if not fs:
            if at is None:
                raise BoundaryMismatchError("empty hcomp needs an object")
            return self.hid[at]
        out = fs[0]
        for f in fs[1:]:
            out = self.hcomp(out, f)
        return out

    def vcomp_many(self, us: Iterable[str], at: str | None = None) -> str:
        us = list(us)
        if not us:
            if at is None:
                raise BoundaryMismatchError("empty vcomp needs an object")
            return self.vid[at]
        out = us[0]
        for u in us[1:]:
            out = self.vcomp(out, u)
        return out

    def sq_hcomp_many(self, sqs: Iterable[str], left_v: str | None = None) -> str:
        sqs = list(sqs)
        if not sqs:
            if left_v is None:
                raise BoundaryMismatchError("empty square row needs a v-cell")
            return self.sq_hid[left_v]
        out = sqs[0]
        for s in sqs[1:]:
            out = self.sq_hcomp(out, s)
        return out

    def sq_vcomp_many(self, sqs: Iterable[str], top_h: str | None = None) -> str:
        sqs = list(sqs)
        if not sqs:
            if top_h is None:
                raise BoundaryMismatchError("empty square column needs an h-cell")
            return self.sq_vid[top_h]
        out = sqs[0]
        for s in sqs[1:]:
            out = self.sq_vcomp(out, s)
        return out

    # -- convenience -----------------------------------------------------

    def is_hid(self, f: str) -> bool:
        return f == self.hid[self.hsrc(f)]

    def is_vid(self, u: str) -> bool:
        return u == self.vid[self.vsrc(u)]

    def is_sq_vid(self, s: str) -> bool:
        return s == self.sq_vid.get(self.frame(s).top)

    def is_sq_hid(self, s: str) -> bool:
        return s == self.sq_hid.get(self.frame(s).left)

    def nonid_hcells(self) -> list[str]:
        return [f for f in self.hcells if not self.is_hid(f)]

    def nonid_vcells(self) -> list[str]:
        return [u for u in self.vcells if not self.is_vid(u)]

    def nonid_squares(self) -> list[str]:
        return [s for s in self.squares
                if not self.is_sq_vid(s) and not self.is_sq_hid(s)]

    def globular_squares(self, top: str, bottom: str) -> list[str]:
        """Squares with the given top/bottom and identity vertical sides."""
        lx = self.vid[self.hsrc(top)]
        rx = self.vid[self.htgt(top)]
        want = Frame(top, bottom, lx, rx)
        return sorted(s for s, fr in self.squares.items() if fr == want)

    def squares_with_frame(self, fr: Frame) -> list[str]:
        return sorted(s for s, q in self.squares.items() if q == fr)

    def summary(self) -> str:
        return (f"{self.name}: {len(self.objects)} objects, "
                f"{len(self.hcells)} h-cells, {len(self.vcells)} v-cells, "
                f"{len(self.squares)} squares")


# ---------------------------------------------------------------------------
# Construction helper
# ---------------------------------------------------------------------------


def build_double_category(
    name: str,
    objects: Iterable[str],
    hcells: dict[str, tuple[str, str]] | None = None,
    vcells: dict[str, tuple[str, str]] | None = None,
    squares: dict[str, Frame] | None = None,
    hcomp: dict[tuple[str, str], str] | None = None,
    vcomp: dict[tuple[str, str], str] | None = None,
    sq_hcomp: dict[tuple[str, str], str] | None = None,
    sq_vcomp: dict[tuple[str, str], str] | None = None,
) -> FiniteDoubleCategory:
    """Assemble a finite double category from its non-identity data.

    Identity cells and every composite that involves an identity are filled
    in automatically; composites of two non-identity cells must be supplied
    through the explicit tables.  The result is *not* validated here; run
    :func:`validate_finite_dbl` for that.
    """
    objects = tuple(objects)
    hcells = dict(hcells or {})
    vcells = dict(vcells or {})
    squares = dict(squares or {})
    hid, vid = {}, {}
    for x in objects:
        hid[x] = f"1h_{x}"
        vid[x] = f"1v_{x}"
        hcells[hid[x]] = (x, x)
        vcells[vid[x]] = (x, x)

    sq_vid, sq_hid = {}, {}
    for x in objects:
        unit = f"1q_{x}"
        squares[unit] = Frame(hid[x], hid[x], vid[x], vid[x])
        sq_vid[hid[x]] = unit
        sq_hid[vid[x]] = unit
    for f, (s, t) in hcells.items():
        if f not in sq_vid:
            nm = f"1e_{f}"
            squares[nm] = Frame(f, f, vid[s], vid[t])
            sq_vid[f] = nm
    for u, (s, t) in vcells.items():
        if u not in sq_hid:
            nm = f"1r_{u}"
            squares[nm] = Frame(hid[s], hid[t], u, u)
            sq_hid[u] = nm

    hcomp = dict(hcomp or {})
    vcomp = dict(vcomp or {})
    for f, (s, t) in hcells.items():
        hcomp.setdefault((hid[s], f), f)
        hcomp.setdefault((f, hid[t]), f)
    for u, (s, t) in vcells.items():
        vcomp.setdefault((vid[s], u), u)
        vcomp.setdefault((u, vid[t]), u)

    sq_hcomp = dict(sq_hcomp or {})
    sq_vcomp = dict(sq_vcomp or {})
    for a, fr in squares.items():
        sq_hcomp.setdefault((sq_hid[fr.left], a), a)
        sq_hcomp.setdefault((a, sq_hid[fr.right]), a)
        sq_vcomp.setdefault((sq_vid[fr.top], a), a)
        sq_vcomp.setdefault((a, sq_vid[fr.bottom]), a)

    # identity squares compose to identity squares of composites
    for (f, g), fg in hcomp.items():
        sq_hcomp.setdefault((sq_vid[f], sq_vid[g]), sq_vid[fg])
    for (u, w), uw in vcomp.items():
        sq_vcomp.setdefault((sq_hid[u], sq_hid[w]), sq_hid[uw])

    return FiniteDoubleCategory(
        name=name, objects=objects, hcells=hcells, vcells=vcells,
        squares=squares, hid=hid, vid=vid,
        hcomp_table=hcomp, vcomp_table=vcomp,
        sq_hcomp_table=sq_hcomp, sq_vcomp_table=sq_vcomp,
        sq_vid=sq_vid, sq_hid=sq_hid)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _check_category(
    cells: dict[str, tuple[str, str]],
    comp: dict[tuple[str, str], str],
    ident: dict[str, str],
    tag: str,
) -> None:
    for f, (s, t) in cells.items():
        if comp.get((ident[s], f)) != f or comp.get((f, ident[t])) != f:
            raise LawViolation(f"{tag}-unit", (f,))
    for (f, g), fg in comp.items():
        if cells[f][1] != cells[g][0]:
            raise LawViolation(f"{tag}-totality", (f, g))
        if cells[fg] != (cells[f][0], cells[g][1]):
            raise LawViolation(f"{tag}-boundary", (f, g))
    for f, (_, t1) in cells.items():
        for g, (s2, t2) in cells.items():
            if t1 != s2:
                continue
            if (f, g) not in comp:
                raise LawViolation(f"{tag}-totality", (f, g))
            for h, (s3, _) in cells.items():
                if t2 != s3:
                    continue
                if comp[(comp[(f, g)], h)] != comp[(f, comp[(g, h)])]:
                    raise LawViolation(f"{tag}-assoc", (f, g, h))


def validate_finite_dbl(cat: FiniteDoubleCategory) -> FiniteDoubleCategory:
    """Exhaustively verify every double-category law over the tables.

    Raises :class:`LawViolation` naming the law and a witness tuple at the
    first counterexample; returns the category unchanged when all laws hold.
    The validator *is* the enumeration: no law is trusted by construction.
    """
    c = cat
    # frames reference declared cells and close up geometrically
    for s, fr in c.squares.items():
        for f in (fr.top, fr.bottom):
            if f not in c.hcells:
                raise LawViolation("frame", (s, f))
        for u in (fr.left, fr.right):
            if u not in c.vcells:
                raise LawViolation("frame", (s, u))
        if (c.hsrc(fr.top) != c.vsrc(fr.left)
                or c.htgt(fr.top) != c.vsrc(fr.right)
                or c.hsrc(fr.bottom) != c.vtgt(fr.left)
                or c.htgt(fr.bottom) != c.vtgt(fr.right)):
            raise LawViolation("frame", (s,))

    _check_category(c.hcells, c.hcomp_table, c.hid, "h")
    _check_category(c.vcells, c.vcomp_table, c.vid, "v")

    # identity squares have the right frames
    for f in c.hcells:
        fr = c.frame(c.sq_vid[f])
        if fr != Frame(f, f, c.vid[c.hsrc(f)], c.vid[c.htgt(f)]):
            raise LawViolation("sq-v-unit-frame", (f,))
    for u in c.vcells:
        fr = c.frame(c.sq_hid[u])
        if fr != Frame(c.hid[c.vsrc(u)], c.hid[c.vtgt(u)], u, u):
            raise LawViolation("sq-h-unit-frame", (u,))
    for x in c.objects:
        if c.sq_vid[c.hid[x]] != c.sq_hid[c.vid[x]]:
            raise LawViolation("unit-square", (x,))

    squares = list(c.squares)
    # totality, boundary and unit laws for square composition
    for a in squares:
        fa = c.frame(a)
        if (c.sq_vcomp_table.get((c.sq_vid[fa.top], a)) != a
                or c.sq_vcomp_table.get((a, c.sq_vid[fa.bottom])) != a):
            raise LawViolation("sq-v-unit", (a,))
        if (c.sq_hcomp_table.get((c.sq_hid[fa.left], a)) != a
                or c.sq_hcomp_table.get((a, c.sq_hid[fa.right])) != a):
            raise LawViolation("sq-h-unit", (a,))
        for b in squares:
            fb = c.frame(b)
            if fa.right == fb.left:
                ab = c.sq_hcomp_table.get((a, b))
                if ab is None:
                    raise LawViolation("sq-h-totality", (a, b))
                want = Frame(c.hcomp(fa.top, fb.top),
                             c.hcomp(fa.bottom, fb.bottom),
                             fa.left, fb.right)
                if c.frame(ab) != want:
                    raise LawViolation("sq-h-boundary", (a, b))
            if fa.bottom == fb.top:
                ab = c.sq_vcomp_table.get((a, b))
                if ab is None:
                    raise LawViolation("sq-v-totality", (a, b))
                want = Frame(fa.top, fb.bottom,
                             c.vcomp(fa.left, fb.left),
                             c.vcomp(fa.right, fb.right))
                if c.frame(ab) != want:
                    raise LawViolation("sq-v-boundary", (a, b))

    # associativity of square composition in both directions
    for a in squares:
        for b in squares:
            if c.frame(a).right != c.frame(b).left:
                continue
            ab = c.sq_hcomp_table[(a, b)]
            for d in squares:
                if c.frame(b).right != c.frame(d).left:
                    continue
                if (c.sq_hcomp_table[(ab, d)]
                        != c.sq_hcomp_table[(a, c.sq_hcomp_table[(b, d)])]):
                    raise LawViolation("sq-h-assoc", (a, b, d))
    for a in squares:
        for b in squares:
            if c.frame(a).bottom != c.frame(b).top:
                continue
            ab = c.sq_vcomp_table[(a, b)]
            for d in squares:
                if c.frame(b).bottom != c.frame(d).top:
                    continue
                if (c.sq_vcomp_table[(ab, d)]
                        != c.sq_vcomp_table[(a, c.sq_vcomp_table[(b, d)])]):
                    raise LawViolation("sq-v-assoc", (a, b, d))

    # identity squares are functorial for composition
    for (f, g), fg in c.hcomp_table.items():
        if c.sq_hcomp_table.get((c.sq_vid[f], c.sq_vid[g])) != c.sq_vid[fg]:
            raise LawViolation("id-square-h", (f, g))
    for (u, w), uw in c.vcomp_table.items():
        if c.sq_vcomp_table.get((c.sq_hid[u], c.sq_hid[w])) != c.sq_hid[uw]:
            raise LawViolation("id-square-v", (u, w))

    # interchange on every composable 2x2 grid
    for a in squares:
        for b in squares:
            if c.frame(a).right != c.frame(b).left:
                continue
            for d in squares:
                if c.frame(a).bottom != c.frame(d).top:
                    continue
                for e in squares:
                    if (c.frame(b).bottom != c.frame(e).top
                            or c.frame(d).right != c.frame(e).left):
                        continue
                    rows = c.sq_vcomp(c.sq_hcomp(a, b), c.sq_hcomp(d, e))
                    cols = c.sq_hcomp(c.sq_vcomp(a, d), c.sq_vcomp(b, e))
                    if rows != cols:
                        raise LawViolation("interchange", (a, b, d, e))
    return cat


# ---------------------------------------------------------------------------
# Product of double categories
# ---------------------------------------------------------------------------


def _pair(a: str, b: str) -> str:
    return f"{a},{b}"


def product(a: FiniteDoubleCategory, b: FiniteDoubleCategory,
            name: str | None = None) -> FiniteDoubleCategory:
    """Cartesian product, with cells named ``x,y``."""
    objects = tuple(_pair(x, y) for x in a.objects for y in b.objects)
    hcells = {_pair(f, g): (_pair(a.hsrc(f), b.hsrc(g)),
                            _pair(a.htgt(f), b.htgt(g)))
              for f in a.hcells for g in b.hcells}
    vcells = {_pair(u, w): (_pair(a.vsrc(u), b.vsrc(w)),
                            _pair(a.vtgt(u), b.vtgt(w)))
              for u in a.vcells for w in b.vcells}
    squares = {}
    for s, fs in a.squares.items():
        for t, ft in b.squares.items():
            squares[_pair(s, t)] = Frame(
                _pair(fs.top, ft.top), _pair(fs.bottom, ft.bottom),
                _pair(fs.left, ft.left), _pair(fs.right, ft.right))
    hid = {_pair(x, y): _pair(a.hid[x], b.hid[y])
           for x in a.objects for y in b.objects}
    vid = {_pair(x, y): _pair(a.vid[x], b.vid[y])
           for x in a.objects for y in b.objects}
    hcomp = {}
    for (f1, g1), h1 in a.hcomp_table.items():
        for (f2, g2), h2 in b.hcomp_table.items():
            hcomp[(_pair(f1, f2), _pair(g1, g2))] = _pair(h1, h2)
    vcomp = {}
    for (f1, g1), h1 in a.vcomp_table.items():
        for (f2, g2), h2 in b.vcomp_table.items():
            vcomp[(_pair(f1, f2), _pair(g1, g2))] = _pair(h1, h2)
    sq_h = {}
    for (f1, g1), h1 in a.sq_hcomp_table.items():
        for (f2, g2), h2 in b.sq_hcomp_table.items():
            sq_h[(_pair(f1, f2), _pair(g1, g2))] = _pair(h1, h2)
    sq_v = {}
    for (f1, g1), h1 in a.sq_vcomp_table.items():
        for (f2, g2), h2 in b.sq_vcomp_table.items():
            sq_v[(_pair(f1, f2), _pair(g1, g2))] = _pair(h1, h2)
    sq_vid = {_pair(f, g): _pair(a.sq_vid[f], b.sq_vid[g])
              for f in a.hcells for g in b.hcells}
    sq_hid = {_pair(u, w): _pair(a.sq_hid[u], b.sq_hid[w])
              for u in a.vcells for w in b.vcells}
    return FiniteDoubleCategory(
        name=name or f"({a.name}x{b.name})",
        objects=objects, hcells=hcells, vcells=vcells, squares=squares,
        hid=hid, vid=vid, hcomp_table=hcomp, vcomp_table=vcomp,
        sq_hcomp_table=sq_h, sq_vcomp_table=sq_v,
        sq_vid=sq_vid, sq_hid=sq_hid)
