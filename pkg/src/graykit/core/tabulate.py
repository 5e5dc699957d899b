"""Bounded tabulation of presented double categories.

Turns a presentation whose cells admit a finite closure into a
:class:`FiniteDoubleCategory` with total tables.  1-cells close as paths
normalised by the presentation's oriented rules.  Squares are supported in
two regimes:

* no two non-identity squares are composable (free-square style inputs), or
* every non-identity square is globular (identity vertical edges), in which
  case square pastings are vertical sequences of whiskered atoms and the
  strict interchange law is enforced by sorting commuting neighbours into a
  canonical order.

Anything else raises :class:`SizeBoundExceeded` style errors rather than
guessing.  Unoriented relations are not consumed here; orient them first.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GraykitError, SizeBoundExceeded
from .finite import FiniteDoubleCategory, Frame
from .presentation import Presentation
from .rewrite import RewriteSystem, canonical, normalize
from .terms import Gen, HComp, IdH, Term, term_to_text

DEFAULT_CELL_CAP = 20_000


def _name_of(t: Term) -> str:
    txt = term_to_text(t).replace(" ", "")
    if isinstance(t, Gen):
        return t.name
    return f"c({txt})"


def _hterm_of_path(path: tuple[str, ...], at: str) -> Term:
    if not path:
        return IdH(Gen(at))
    t: Term = Gen(path[0])
    for g in path[1:]:
        t = HComp(t, Gen(g))
    return t


@dataclass(frozen=True)
class _Atom:
    """A square generator whiskered by h-paths on both sides."""

    pre: tuple[str, ...]
    gen: str
    post: tuple[str, ...]


def tabulate(pres: Presentation, cap: int = DEFAULT_CELL_CAP,
             name: str | None = None) -> FiniteDoubleCategory:
    if pres.flavor != "double":
        raise GraykitError("tabulate expects a double-flavour presentation")
    sig = pres.signature()
    rules_h = RewriteSystem(
        [(r.lhs, r.rhs) for r in pres.relations if r.oriented and r.dim == "h"])
    rules_v = RewriteSystem(
        [(r.lhs, r.rhs) for r in pres.relations if r.oriented and r.dim == "v"])
    sq_rules = [r for r in pres.relations if r.dim == "sq"]
    if any(not r.oriented for r in pres.relations):
        raise GraykitError("tabulate requires oriented relations")

    objects = tuple(pres.obs)

    # ---- close 1-cells as normalised paths -------------------------------
    def close_one(gens: dict[str, tuple[str, str]], rules, path_of):
        cells: dict[Term, tuple[str, str]] = {}
        for g, (s, t) in gens.items():
            nf = normalize(Gen(g), rules)
            cells.setdefault(nf, (s, t))
        frontier = list(cells)
        while frontier:
            new = []
            for a in frontier:
                for b in list(cells):
                    for x, y in ((a, b), (b, a)):
                        if cells[x][1] != cells[y][0]:
                            continue
                        nf = normalize(canonical(HComp(x, y))
                                       if rules is rules_h
                                       else canonical(_vjoin(x, y)), rules)
                        if nf not in cells and not _is_id_term(nf):
                            cells[nf] = (cells[x][0], cells[y][1])
                            new.append(nf)
                if len(cells) > cap:
                    raise SizeBoundExceeded("1-cell closure exceeded cap")
            frontier = new
        return cells

    def _vjoin(x, y):
        from .terms import VComp
        return VComp(x, y)

    def _is_id_term(t):
        from .terms import IdH, IdV
        return isinstance(t, (IdH, IdV))

    hcells_by_term = close_one(pres.h, rules_h, sig.hpath)
    vcells_by_term = close_one(pres.v, rules_v, sig.vpath)

    hname: dict[Term, str] = {t: _name_of(t) for t in hcells_by_term}
    vname: dict[Term, str] = {t: _name_of(t) for t in vcells_by_term}
    hcells = {hname[t]: b for t, b in hcells_by_term.items()}
    vcells = {vname[t]: b for t, b in vcells_by_term.items()}

    # lookup from generator path to table name
    hpath_name: dict[tuple[str, ...], str] = {}
    for t in hcells_by_term:
        _, p, _ = sig.hpath(t)
        hpath_name[p] = hname[t]
    vpath_name: dict[tuple[str, ...], str] = {}
    for t in vcells_by_term:
        _, p, _ = sig.vpath(t)
        vpath_name[p] = vname[t]

    def hcomp_path(a: Term, b: Term) -> Term:
        return normalize(canonical(HComp(a, b)), rules_h)

    hcomp_table: dict[tuple[str, str], str] = {}
    for a, (sa, ta) in hcells_by_term.items():
        for b, (sb, tb) in hcells_by_term.items():
            if ta != sb:
                continue
            nf = hcomp_path(a, b)
            if _is_id_term(nf):
                hcomp_table[(hname[a], hname[b])] = f"1h_{sa}"
            else:
                hcomp_table[(hname[a], hname[b])] = hname[nf]
    vcomp_table: dict[tuple[str, str], str] = {}
    for a, (sa, ta) in vcells_by_term.items():
        for b, (sb, tb) in vcells_by_term.items():
            if ta != sb:
                continue
            nf = normalize(canonical(_vjoin(a, b)), rules_v)
            if _is_id_term(nf):
                vcomp_table[(vname[a], vname[b])] = f"1v_{sa}"
            else:
                vcomp_table[(vname[a], vname[b])] = vname[nf]

    # ---- squares ---------------------------------------------------------
    sq_gens = dict(pres.sq)
    globular = all(
        sig.sq_boundary(Gen(s)).left == () == sig.sq_boundary(Gen(s)).right
        for s in sq_gens)
    if sq_gens and not globular:
        # allowed only when no two non-identity squares are composable
        bounds = {s: sig.sq_boundary(Gen(s)) for s in sq_gens}
        for a, ba in bounds.items():
            for b, bb in bounds.items():
                if ba.right and ba.right == bb.left and ba.ne == bb.nw:
                    raise GraykitError(
                        "tabulate: composable non-globular squares")
                if ba.bottom == bb.top and ba.sw == bb.nw and ba.bottom:
                    raise GraykitError(
                        "tabulate: composable non-globular squares")
        return _tabulate_sparse(pres, name, objects, hcells, vcells,
                                hcomp_table, vcomp_table, sig,
                                hpath_name, vpath_name,
                                hcells_by_term, vcells_by_term,
                                hname, vname)

    if sq_rules:
        raise GraykitError("tabulate: square relations are not supported")

    # globular case: squares are canonical atom sequences
    gen_bounds = {s: sig.sq_boundary(Gen(s)) for s in sq_gens}

    def norm_seq(atoms: tuple[_Atom, ...]) -> tuple[_Atom, ...]:
        """Sort commuting neighbours so the left-acting atom comes first.

        Each swap lexicographically decreases the tuple of action offsets,
        so the loop terminates and the result is the interchange normal
        form of the pasting.
        """
        out = list(atoms)
        changed = True
        while changed:
            changed = False
            for i in range(len(out) - 1):
                a, b = out[i], out[i + 1]
                da, ca = gen_bounds[a.gen].top, gen_bounds[a.gen].bottom
                db, cb = gen_bounds[b.gen].top, gen_bounds[b.gen].bottom
                la = len(a.pre)
                lb, rb = len(b.pre), len(b.pre) + len(db)
                if rb < la or (rb == la and (lb, b.gen) < (la, a.gen)):
                    # b acts strictly left of a's codomain segment: commute.
                    gap = a.pre[rb:]  # part between b's region and a's
                    new_first = _Atom(b.pre, b.gen, gap + da + a.post)
                    new_second = _Atom(b.pre + cb + gap, a.gen, a.post)
                    out[i], out[i + 1] = new_first, new_second
                    changed = True
                    break
        return tuple(out)

    def _obj_at(path: tuple[str, ...], i: int, start: str, p) -> str:
        return start if i == 0 else p.h[path[i - 1]][1]

    # enumerate all composite squares: sequences of atoms over each top path
    squares: dict[str, Frame] = {}
    sq_term: dict[str, tuple[tuple[str, ...], tuple[_Atom, ...]]] = {}
    seq_name: dict[tuple, str] = {}

    all_paths = list(hpath_name.items())

    def path_obj_ends(p: tuple[str, ...], fallback=None):
        if not p:
            return fallback, fallback
        s = pres.h[p[0]][0]
        t = pres.h[p[-1]][1]
        return s, t

    frontier: list[tuple[tuple[str, ...], tuple[_Atom, ...], str, str]] = []
    seen: set[tuple] = set()
    for p, nm in all_paths:
        s, t = path_obj_ends(p)
        seen.add((s, p, ()))
        frontier.append((p, (), s, t))
    for x in objects:
        seen.add((x, (), ()))
        frontier.append(((), (), x, x))
    results: list[tuple[tuple[str, ...], tuple[_Atom, ...], str, str]] = []
    while frontier:
        top, atoms, s, t = frontier.pop()
        results.append((top, atoms, s, t))
        cur = top
        for at in atoms:
            cur = at.pre + gen_bounds[at.gen].bottom + at.post
        # try to extend by one more whiskered generator
        for g, b in gen_bounds.items():
            d = b.top
            for i in range(len(cur) - len(d) + 1):
                if cur[i:i + len(d)] != d:
                    continue
                if len(d) == 0 and b.nw != _obj_at(cur, i, s, pres):
                    continue
                new_atom = _Atom(cur[:i], g, cur[i + len(d):])
                seq = norm_seq(atoms + (new_atom,))
                key = (s, top, seq)
                if key in seen:
                    continue
                seen.add(key)
                if len(seen) > cap:
                    raise SizeBoundExceeded("square closure exceeded cap")
                frontier.append((top, seq, s, t))

    for top, atoms, s, t in sorted(
            results, key=lambda r: (r[2], r[0], tuple((a.pre, a.gen, a.post)
                                                      for a in r[1]))):
        if not atoms:
            continue  # identity squares are added by the assembler below
        cur = top
        for at in atoms:
            cur = at.pre + gen_bounds[at.gen].bottom + at.post
        bottom = cur
        topname = hpath_name.get(top) or f"1h_{s}"
        botname = hpath_name.get(bottom) or f"1h_{s}"
        if len(atoms) == 1 and not atoms[0].pre and not atoms[0].post:
            nm = atoms[0].gen
        else:
            nm = "q(" + ";".join(
                f"{','.join(a.pre)}[{a.gen}]{','.join(a.post)}"
                for a in atoms) + ")"
        squares[nm] = Frame(topname, botname, f"1v_{s}", f"1v_{t}")
        sq_term[nm] = (s, top, atoms)
        seq_name[(s, top, atoms)] = nm

    cat = _assemble(pres, name, objects, hcells, vcells,
                    hcomp_table, vcomp_table, squares)

    # square composition tables from atom sequences
    def lookup_seq(s, top, atoms):
        atoms = norm_seq(atoms)
        if not atoms:
            nm = hpath_name.get(top) or f"1h_{s}"
            return cat.sq_vid[nm]
        return seq_name[(s, top, atoms)]

    for a_nm, (s_a, top_a, at_a) in sq_term.items():
        fa = cat.frame(a_nm)
        bot_a = top_a
        for x in at_a:
            bot_a = x.pre + gen_bounds[x.gen].bottom + x.post
        # vertical: a over b
        for b_nm, (s_b, top_b, at_b) in sq_term.items():
            fb = cat.frame(b_nm)
            if fa.bottom != fb.top or s_a != s_b:
                continue
            cat.sq_vcomp_table[(a_nm, b_nm)] = lookup_seq(
                s_a, top_a, at_a + at_b)
        # horizontal: a left of b (both globular)
        for b_nm, (s_b, top_b, at_b) in sq_term.items():
            fb = cat.frame(b_nm)
            if fa.right != fb.left:
                continue
            if cat.htgt(fa.top) != s_b:
                continue
            shifted_a = tuple(_Atom(x.pre, x.gen, x.post + top_b)
                              for x in at_a)
            shifted_b = tuple(_Atom(bot_a + x.pre, x.gen, x.post)
                              for x in at_b)
            cat.sq_hcomp_table[(a_nm, b_nm)] = lookup_seq(
                s_a, top_a + top_b, shifted_a + shifted_b)
        # horizontal with identity squares on composite h-cells either side
        for f_nm in list(cat.hcells):
            fpath = _path_of_name(f_nm, hpath_name)
            if fpath is None:
                continue
            idsq = cat.sq_vid[f_nm]
            if cat.htgt(f_nm) == s_a:
                shifted = tuple(_Atom(fpath + x.pre, x.gen, x.post)
                                for x in at_a)
                cat.sq_hcomp_table[(idsq, a_nm)] = lookup_seq(
                    cat.hsrc(f_nm), fpath + top_a, shifted)
            if cat.htgt(fa.top) == cat.hsrc(f_nm):
                shifted = tuple(_Atom(x.pre, x.gen, x.post + fpath)
                                for x in at_a)
                cat.sq_hcomp_table[(a_nm, idsq)] = lookup_seq(
                    s_a, top_a + fpath, shifted)

    cat.cell_terms = _cell_terms(hcells_by_term, vcells_by_term,
                                 hname, vname, sq_term, gen_bounds,
                                 hpath_name)
    return cat


def _path_of_name(nm, hpath_name):
    for p, n in hpath_name.items():
        if n == nm:
            return p
    return None


def _cell_terms(hterms, vterms, hname, vname, sq_term, gen_bounds,
                hpath_name):
    out: dict[tuple[str, str], Term] = {}
    for t in hterms:
        out[("h", hname[t])] = t
    for t in vterms:
        out[("v", vname[t])] = t
    from .terms import IdSqV, VComp
    for nm, (_, top, atoms) in sq_term.items():
        term: Term | None = None
        for a in atoms:
            step: Term = Gen(a.gen)
            if a.pre:
                step = HComp(IdSqV(_hterm_of_path(a.pre, "")), step)
            if a.post:
                step = HComp(step, IdSqV(_hterm_of_path(a.post, "")))
            term = step if term is None else VComp(term, step)
        out[("sq", nm)] = canonical(term)
    return out


def _tabulate_sparse(pres, name, objects, hcells, vcells, hcomp_table,
                     vcomp_table, sig, hpath_name, vpath_name,
                     hterms, vterms, hname, vname):
    """Squares exist but never compose with each other non-trivially."""
    squares: dict[str, Frame] = {}
    for s in pres.sq:
        b = sig.sq_boundary(Gen(s))
        top = hpath_name.get(b.top) or f"1h_{b.nw}"
        bot = hpath_name.get(b.bottom) or f"1h_{b.sw}"
        left = vpath_name.get(b.left) or f"1v_{b.nw}"
        right = vpath_name.get(b.right) or f"1v_{b.ne}"
        squares[s] = Frame(top, bot, left, right)
    cat = _assemble(pres, name, objects, hcells, vcells, hcomp_table,
                    vcomp_table, squares)
    for t in hterms:
        cat.cell_terms[("h", hname[t])] = t
    for t in vterms:
        cat.cell_terms[("v", vname[t])] = t
    for s in pres.sq:
        cat.cell_terms[("sq", s)] = Gen(s)
    return cat


def _assemble(pres, name, objects, hcells, vcells, hcomp_table,
              vcomp_table, squares) -> FiniteDoubleCategory:
    from .finite import build_double_category
    cat = build_double_category(
        name or pres.name, objects, hcells=hcells, vcells=vcells,
        squares={k: v for k, v in squares.items()},
        hcomp=hcomp_table, vcomp=vcomp_table)
    return cat


# ---------------------------------------------------------------------------
# Writing a finite double category back out as a presentation
# ---------------------------------------------------------------------------


def finite_to_presentation(cat: FiniteDoubleCategory) -> str:
    """Serialise total tables as a presentation with oriented rules.

    Every non-identity cell becomes a generator and every non-trivial table
    entry an oriented relation, so ``tabulate(parse(...))`` reconstructs the
    same category with the same names.
    """
    lines = [f"dblcat {cat.name}"]
    for x in cat.objects:
        lines.append(f"ob {x}")
    nonid_h = [f for f in cat.hcells if not cat.is_hid(f)]
    nonid_v = [u for u in cat.vcells if not cat.is_vid(u)]
    for f in nonid_h:
        s, t = cat.hcells[f]
        lines.append(f"h {f} : {s} -> {t}")
    for u in nonid_v:
        s, t = cat.vcells[u]
        lines.append(f"v {u} : {s} ~> {t}")

    def h_ref(f):
        return f"id_h({cat.hsrc(f)})" if cat.is_hid(f) else f

    def v_ref(u):
        return f"id_v({cat.vsrc(u)})" if cat.is_vid(u) else u

    for s in cat.nonid_squares():
        fr = cat.frame(s)
        lines.append(f"sq {s} : [top={h_ref(fr.top)} left={v_ref(fr.left)} "
                     f"right={v_ref(fr.right)} bot={h_ref(fr.bottom)}]")
    for (f, g), fg in sorted(cat.hcomp_table.items()):
        if cat.is_hid(f) or cat.is_hid(g):
            continue
        lines.append(f"rel h: {f} * {g} -> {h_ref(fg)}")
    for (u, w), uw in sorted(cat.vcomp_table.items()):
        if cat.is_vid(u) or cat.is_vid(w):
            continue
        lines.append(f"rel v: {u} / {w} -> {v_ref(uw)}")
    return "\n".join(lines) + "\n"
