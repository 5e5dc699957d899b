"""Oriented ground rewriting on pasting terms.

The rules of a presentation are ground (both sides are closed terms over
the generators), so matching is syntactic equality after a structural
normalisation that enforces the strict laws every double category has:
associativity is flattened, units are dropped, and the two unit squares on
an identity 1-cell are identified.

Strategy is leftmost-innermost and rules are tried in declaration order;
exceeding the step bound raises rather than silently accepting.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import StepBoundExceeded
from .presentation import Presentation
from .terms import (Gen, HComp, IdH, IdSqH, IdSqV, IdV, Term, VComp,
                    WhiskL, WhiskR)

DEFAULT_STEP_BOUND = 10_000


@dataclass
class RewriteSystem:
    rules: list[tuple[Term, Term]] = field(default_factory=list)
    strategy: str = "leftmost-innermost"
    step_bound: int = DEFAULT_STEP_BOUND

    @classmethod
    def from_presentation(cls, pres: Presentation,
                          step_bound: int = DEFAULT_STEP_BOUND
                          ) -> "RewriteSystem":
        rules = [(canonical(r.lhs), canonical(r.rhs))
                 for r in pres.relations if r.oriented]
        return cls(rules=rules, step_bound=step_bound)


# ---------------------------------------------------------------------------
# Structural canonical form (strict laws only)
# ---------------------------------------------------------------------------


def _flatten(t: Term, node) -> list[Term]:
    if isinstance(t, node):
        a, b = ((t.left, t.right) if node is HComp else (t.top, t.bottom))
        return _flatten(a, node) + _flatten(b, node)
    return [t]


def _is_unit(t: Term) -> bool:
    return isinstance(t, (IdH, IdV, IdSqH, IdSqV))


def _rebuild(parts: list[Term], node) -> Term:
    out = parts[0]
    for p in parts[1:]:
        out = node(out, p) if node is HComp else node(out, p)
    return out


def canonical(t: Term) -> Term:
    """Left-nested, unit-free canonical form of a term."""
    if isinstance(t, Gen):
        return t
    if isinstance(t, IdH):
        return IdH(canonical(t.at))
    if isinstance(t, IdV):
        return IdV(canonical(t.at))
    if isinstance(t, IdSqV):
        inner = canonical(t.at)
        return IdSqV(inner)
    if isinstance(t, IdSqH):
        inner = canonical(t.at)
        if isinstance(inner, IdV):
            return IdSqV(IdH(inner.at))
        return IdSqH(inner)
    if isinstance(t, (HComp, VComp)):
        node = HComp if isinstance(t, HComp) else VComp
        parts = [canonical(p) for p in _flatten(t, node)]
        keep = [p for p in parts if not _is_unit(p)]
        if not keep:
            return parts[0]
        return _rebuild(keep, node)
    if isinstance(t, WhiskL):
        return WhiskL(canonical(t.cell1), canonical(t.body))
    if isinstance(t, WhiskR):
        return WhiskR(canonical(t.body), canonical(t.cell1))
    return t


# ---------------------------------------------------------------------------
# Rewriting
# ---------------------------------------------------------------------------


def _children(t: Term) -> list[tuple[str, Term]]:
    out = []
    for attr in ("at", "left", "right", "top", "bottom", "cell1", "body"):
        sub = getattr(t, attr, None)
        if isinstance(sub, Term):
            out.append((attr, sub))
    return out


def _replace(t: Term, attr: str, new: Term) -> Term:
    kwargs = {a: getattr(t, a) for a, _ in _children(t)}
    kwargs[attr] = new
    return type(t)(**kwargs)


class _Budget:
    def __init__(self, bound: int):
        self.left = bound

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise StepBoundExceeded("rewrite step bound exceeded")


def _segments(t: Term):
    """All (node, prefix, segment, suffix) decompositions of a composition."""
    for node in (HComp, VComp):
        if isinstance(t, node):
            parts = _flatten(t, node)
            n = len(parts)
            for i in range(n):
                for j in range(i + 1, n + 1):
                    if j - i == n:
                        continue  # the whole term is matched at the root
                    yield node, parts[:i], parts[i:j], parts[j:]


def _rewrite_at_root(t: Term, rules, budget: _Budget) -> Term | None:
    """Try every rule at the root, including inside flattened compositions."""
    for lhs, rhs in rules:
        if t == lhs:
            budget.spend()
            return rhs
        for node, pre, seg, post in _segments(t):
            if len(seg) == 1:
                continue  # single parts are handled by recursion
            if canonical(_rebuild(seg, node)) == lhs:
                budget.spend()
                return canonical(_rebuild(pre + [rhs] + post, node))
    return None


def _normalize(t: Term, rules, budget: _Budget) -> Term:
    t = canonical(t)
    # innermost: normalise children first
    changed = True
    while changed:
        changed = False
        for attr, sub in _children(t):
            nsub = _normalize(sub, rules, budget)
            if nsub != sub:
                t = canonical(_replace(t, attr, nsub))
                changed = True
                break
        if changed:
            continue
        got = _rewrite_at_root(t, rules, budget)
        if got is not None:
            t = canonical(got)
            changed = True
    return t


def normalize(t: Term, rs: RewriteSystem, sig=None) -> Term:
    """Reduce ``t`` to a normal form under the system's oriented rules.

    When a signature is supplied the input is typechecked first and the
    result is verified to have the same boundary (per-step preservation
    follows because every rule is boundary-preserving by construction).
    """
    if sig is not None:
        kind = sig.check(t)
    budget = _Budget(rs.step_bound)
    out = _normalize(canonical(t), list(rs.rules), budget)
    if sig is not None:
        kind2 = sig.check(out)
        if kind != kind2:
            raise StepBoundExceeded(
                f"normalisation changed cell kind {kind} -> {kind2}")
        before = _boundary_key(sig, t, kind)
        after = _boundary_key(sig, out, kind)
        if before != after:
            raise StepBoundExceeded("normalisation changed a boundary")
    return out


def _boundary_key(sig, t, kind):
    if kind == "h":
        s, _, g = sig.hpath(t)
        return (s, g)
    if kind == "v":
        s, _, g = sig.vpath(t)
        return (s, g)
    if kind == "sq":
        b = sig.sq_boundary(t)
        return (b.nw, b.ne, b.sw, b.se, b.top, b.bottom, b.left, b.right)
    return ()
