"""Small double categories used as enumerable test universes."""

from __future__ import annotations

from .finite import FiniteDoubleCategory, Frame, build_double_category, product


def terminal() -> FiniteDoubleCategory:
    """One object and nothing but identities."""
    return build_double_category("one", ["*"])


def arrow_h() -> FiniteDoubleCategory:
    """Two objects and one non-identity horizontal 1-cell."""
    return build_double_category(
        "2h", ["X", "Y"], hcells={"f": ("X", "Y")})


def arrow_v() -> FiniteDoubleCategory:
    """Two objects and one non-identity vertical 1-cell."""
    return build_double_category(
        "2v", ["X", "Y"], vcells={"u": ("X", "Y")})


def free_square() -> FiniteDoubleCategory:
    """Four objects, an h-cell pair, a v-cell pair and one free square."""
    return build_double_category(
        "sq",
        ["X", "Y", "Xd", "Yd"],
        hcells={"f": ("X", "Y"), "g": ("Xd", "Yd")},
        vcells={"u": ("X", "Xd"), "v": ("Y", "Yd")},
        squares={"s": Frame("f", "g", "u", "v")})


def standard_fixtures() -> dict[str, FiniteDoubleCategory]:
    """The eight canonical fixtures used by the acceptance suite."""
    one = terminal()
    h = arrow_h()
    v = arrow_v()
    sq = free_square()
    return {
        "one": one,
        "2h": h,
        "2v": v,
        "sq": sq,
        "2hx2v": product(h, v, "2hx2v"),
        "2hx2h": product(h, h, "2hx2h"),
        "2vx2v": product(v, v, "2vx2v"),
        "2hxsq": product(h, sq, "2hxsq"),
    }
