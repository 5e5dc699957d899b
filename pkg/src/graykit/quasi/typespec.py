"""Type tags for multivariable quasi-functors.

``var_types[i]`` is the strictness of the functors acting on the cells of
variable ``i`` (the family indexed by objects of the other variables);
``tkind`` selects the orientation of the four structure-cell families:
``o-l`` pairs horizontally-oplax with vertically-lax data, ``l-o`` the
flip, ``ps`` requires invertible structure cells and ``st`` identity ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import TypeTagError

FUNCTOR_TYPES = ("strict", "lax", "oplax", "pseudo")
TKINDS = ("o-l", "l-o", "ps", "st")

_SHORT = {"st": "strict", "lx": "lax", "oplx": "oplax", "ps": "pseudo",
          "strict": "strict", "lax": "lax", "oplax": "oplax",
          "pseudo": "pseudo"}


def functor_type(tag: str) -> str:
    try:
        return _SHORT[tag]
    except KeyError:
        raise TypeTagError(tag) from None


@dataclass(frozen=True)
class TypeSpec:
    var_types: tuple[str, ...]
    tkind: str = "o-l"

    def __post_init__(self):
        for t in self.var_types:
            if t not in FUNCTOR_TYPES:
                raise TypeTagError(t)
        if self.tkind not in TKINDS:
            raise TypeTagError(self.tkind)

    @property
    def arity(self) -> int:
        return len(self.var_types)

    @property
    def tight_left(self) -> bool:
        rest = set(self.var_types[1:])
        return (self.var_types[0] == "strict" and len(rest) <= 1)

    @property
    def tight_right(self) -> bool:
        rest = set(self.var_types[:-1])
        return (self.var_types[-1] == "strict" and len(rest) <= 1)

    def pair(self, i: int, j: int) -> "TypeSpec":
        return TypeSpec((self.var_types[i], self.var_types[j]), self.tkind)

    @classmethod
    def parse(cls, text: str, arity: int = 2) -> "TypeSpec":
        """Parse e.g. ``st,o-l`` or ``st,lx,o-l`` (last field = tkind)."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) < 2:
            raise TypeTagError(text)
        tkind = parts[-1]
        kinds = [functor_type(p) for p in parts[:-1]]
        if len(kinds) == 1:
            kinds = kinds * arity
        return cls(tuple(kinds), tkind)

    def short(self) -> str:
        inv = {"strict": "st", "lax": "lx", "oplax": "oplx", "pseudo": "ps"}
        return ",".join(inv[t] for t in self.var_types) + f",{self.tkind}"
