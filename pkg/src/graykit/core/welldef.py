"""Well-definedness of generator assignments into a finite codomain.

A strict functor out of a presented double category is exactly a generator
assignment under which both sides of every relation evaluate to the same
cell.  This module provides the single-assignment check and the exhaustive
backtracking enumeration of all such assignments.
"""

from __future__ import annotations

from ..errors import (BoundaryMismatchError, SizeBoundExceeded,
                      UncoveredGeneratorError)
from ..report import Report
from .finite import FiniteDoubleCategory, Frame
from .presentation import Presentation
from .terms import Gen, eval_term, gens_of

DEFAULT_NODE_CAP = 5_000_000


def check_well_defined(gen_map: dict[str, str], pres: Presentation,
                       cat: FiniteDoubleCategory) -> Report:
    """Verify that a generator assignment respects every relation."""
    rep = Report("well-defined", f"{pres.name}->{cat.name}")
    for g in pres.generator_names():
        if g not in gen_map:
            raise UncoveredGeneratorError(g)
    sig = pres.signature()
    for x in pres.obs:
        rep.require("boundary", ("ob", x), gen_map[x] in cat.objects, True)
    for f, (s, t) in pres.h.items():
        img = gen_map[f]
        ok = (img in cat.hcells
              and cat.hcells[img] == (gen_map[s], gen_map[t]))
        rep.require("boundary", ("h", f), ok, True)
    for u, (s, t) in pres.v.items():
        img = gen_map[u]
        ok = (img in cat.vcells
              and cat.vcells[img] == (gen_map[s], gen_map[t]))
        rep.require("boundary", ("v", u), ok, True)
    for q, (top, bot, left, right) in pres.sq.items():
        img = gen_map[q]
        try:
            want = Frame(eval_term(top, cat, gen_map),
                         eval_term(bot, cat, gen_map),
                         eval_term(left, cat, gen_map),
                         eval_term(right, cat, gen_map))
            ok = img in cat.squares and cat.frame(img) == want
        except (BoundaryMismatchError, KeyError):
            ok = False
        rep.require("boundary", ("sq", q), ok, True)
    if not rep.ok:
        return rep
    for i, rel in enumerate(pres.relations):
        try:
            lv = eval_term(rel.lhs, cat, gen_map)
        except (BoundaryMismatchError, KeyError) as exc:
            rep.fail("relation", (rel.dim, i), f"lhs does not paste: {exc}")
            continue
        try:
            rv = eval_term(rel.rhs, cat, gen_map)
        except (BoundaryMismatchError, KeyError) as exc:
            rep.fail("relation", (rel.dim, i), f"rhs does not paste: {exc}")
            continue
        rep.require("relation", (rel.dim, i), lv, rv)
    return rep


def _dependency_order(pres: Presentation) -> list[str]:
    return (sorted(pres.obs) + sorted(pres.h) + sorted(pres.v)
            + sorted(pres.sq))


def enumerate_assignments(pres: Presentation, cat: FiniteDoubleCategory,
                          node_cap: int = DEFAULT_NODE_CAP
                          ) -> list[dict[str, str]]:
    """All relation-respecting generator assignments, in canonical order.

    Backtracks over generators in dependency order (objects, then 1-cells,
    then squares), pruning on boundaries immediately and on each relation
    as soon as all the generators it mentions are assigned.
    """
    order = _dependency_order(pres)
    index = {g: i for i, g in enumerate(order)}
    rel_ready: dict[int, list] = {i: [] for i in range(len(order))}
    for rel in pres.relations:
        gens = gens_of(rel.lhs) | gens_of(rel.rhs)
        if not gens:
            continue
        last = max(index[g] for g in gens)
        rel_ready[last].append(rel)

    results: list[dict[str, str]] = []
    assign: dict[str, str] = {}
    nodes = 0

    obj_choices = sorted(cat.objects)

    def candidates(g: str) -> list[str]:
        if g in pres.obs:
            return obj_choices
        if g in pres.h:
            s, t = pres.h[g]
            st = (assign[s], assign[t])
            return sorted(f for f, b in cat.hcells.items() if b == st)
        if g in pres.v:
            s, t = pres.v[g]
            st = (assign[s], assign[t])
            return sorted(u for u, b in cat.vcells.items() if b == st)
        top, bot, left, right = pres.sq[g]
        try:
            want = Frame(eval_term(top, cat, assign),
                         eval_term(bot, cat, assign),
                         eval_term(left, cat, assign),
                         eval_term(right, cat, assign))
        except (BoundaryMismatchError, KeyError):
            return []
        return cat.squares_with_frame(want)

    def rels_ok(i: int) -> bool:
        for rel in rel_ready[i]:
            try:
                if (eval_term(rel.lhs, cat, assign)
                        != eval_term(rel.rhs, cat, assign)):
                    return False
            except (BoundaryMismatchError, KeyError):
                return False
        return True

    def step(i: int) -> None:
        nonlocal nodes
        if i == len(order):
            results.append(dict(assign))
            return
        g = order[i]
        for c in candidates(g):
            nodes += 1
            if nodes > node_cap:
                raise SizeBoundExceeded(
                    f"assignment search exceeded {node_cap} nodes")
            assign[g] = c
            if rels_ok(i):
                step(i + 1)
            del assign[g]

    step(0)
    results.sort(key=lambda m: tuple(m[g] for g in order))
    return results
