"""Presentations: typed generators plus relations over pasting terms.

This is the universal input format.  The surface grammar is line oriented:

.. code-block:: text

    # comment
    dblcat NAME            (or: graycat NAME)
    ob X
    h f : X -> Y
    v u : X ~> Y
    sq s : [top=f left=u right=v bot=g]
    1 f : X -> Y           (gray flavour)
    2 a : f => g
    3 L : a ~~> b
    rel h: g * f = e       (unoriented equation)
    rel h: id_h(X) * f -> f   (oriented rewrite rule, left to right)

Relation dimensions are ``h``, ``v``, ``sq`` for the double flavour and
``1``, ``2``, ``3`` for the gray flavour.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import BoundaryMismatchError, ParseError, UnknownNameError
from .terms import (DblSignature, Gen, HComp, IdH, IdSqH, IdSqV, IdV,
                    SigmaLit, Term, VComp, WhiskL, WhiskR, term_to_text)


@dataclass(frozen=True)
class Relation:
    dim: str
    lhs: Term
    rhs: Term
    oriented: bool  # True: rewrite rule left -> right


@dataclass
class Presentation:
    flavor: str  # "double" | "gray"
    name: str
    obs: list[str] = field(default_factory=list)
    h: dict[str, tuple[str, str]] = field(default_factory=dict)
    v: dict[str, tuple[str, str]] = field(default_factory=dict)
    sq: dict[str, tuple[Term, Term, Term, Term]] = field(default_factory=dict)
    c1: dict[str, tuple[str, str]] = field(default_factory=dict)
    c2: dict[str, tuple[Term, Term]] = field(default_factory=dict)
    c3: dict[str, tuple[Term, Term]] = field(default_factory=dict)
    relations: list[Relation] = field(default_factory=list)
    locs: dict[str, tuple[int, int]] = field(default_factory=dict)

    def signature(self) -> DblSignature:
        if self.flavor != "double":
            raise ValueError("double-flavour signature requested on gray input")
        return DblSignature(self.obs, self.h, self.v, self.sq)

    def generator_names(self) -> list[str]:
        if self.flavor == "double":
            return (list(self.obs) + list(self.h) + list(self.v)
                    + list(self.sq))
        return (list(self.obs) + list(self.c1) + list(self.c2)
                + list(self.c3))

    def counts(self) -> tuple[int, int, int, int]:
        if self.flavor == "double":
            return (len(self.obs), len(self.h), len(self.v), len(self.sq))
        return (len(self.obs), len(self.c1), len(self.c2), len(self.c3))

    # -- serialisation -----------------------------------------------------

    def to_text(self) -> str:
        out = []
        head = "dblcat" if self.flavor == "double" else "graycat"
        out.append(f"{head} {self.name}")
        for x in self.obs:
            out.append(f"ob {x}")
        if self.flavor == "double":
            for f, (s, t) in self.h.items():
                out.append(f"h {f} : {s} -> {t}")
            for u, (s, t) in self.v.items():
                out.append(f"v {u} : {s} ~> {t}")
            for q, (top, bot, left, right) in self.sq.items():
                out.append(
                    f"sq {q} : [top={term_to_text(top)} "
                    f"left={term_to_text(left)} right={term_to_text(right)} "
                    f"bot={term_to_text(bot)}]")
        else:
            for f, (s, t) in self.c1.items():
                out.append(f"1 {f} : {s} -> {t}")
            for a, (d, c) in self.c2.items():
                out.append(f"2 {a} : {term_to_text(d)} => {term_to_text(c)}")
            for l, (d, c) in self.c3.items():
                out.append(f"3 {l} : {term_to_text(d)} ~~> {term_to_text(c)}")
        for r in self.relations:
            op = "->" if r.oriented else "="
            out.append(f"rel {r.dim}: {term_to_text(r.lhs)} {op} "
                       f"{term_to_text(r.rhs)}")
        return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Tokeniser
# ---------------------------------------------------------------------------

_RESERVED_CALLS = {"id_h", "id_v", "id_sq_h", "id_sq_v", "sigma"}
_SYMBOLS = ("~~>", "<|", "|>", "->", "~>", "=>", "[", "]", "(", ")",
            ",", ":", "=", "*", "/")


def _tokenize(line: str, lineno: int) -> list[tuple[str, str, int]]:
    """Returns (kind, text, column) triples; kind is NAME or SYM."""
    toks = []
    i, n = 0, len(line)
    while i < n:
        ch = line[i]
        if ch in " \t":
            i += 1
            continue
        if ch == "#":
            break
        matched = False
        for sym in _SYMBOLS:
            if line.startswith(sym, i):
                toks.append(("SYM", sym, i + 1))
                i += len(sym)
                matched = True
                break
        if matched:
            continue
        if ch.isalnum() or ch in "_'":
            j = i
            while j < n and (line[j].isalnum() or line[j] in "_'"):
                j += 1
            word = line[i:j]
            # a non-reserved identifier may carry a balanced paren suffix,
            # which is part of the name (synthesised tensor generators)
            if j < n and line[j] == "(" and word not in _RESERVED_CALLS:
                depth, k = 0, j
                while k < n:
                    if line[k] == "(":
                        depth += 1
                    elif line[k] == ")":
                        depth -= 1
                        if depth == 0:
                            break
                    k += 1
                if depth != 0:
                    raise ParseError("unbalanced parentheses in name",
                                     lineno, i + 1)
                word = line[i:k + 1]
                j = k + 1
            toks.append(("NAME", word, i + 1))
            i = j
            continue
        raise ParseError(f"bad token {ch!r}", lineno, i + 1)
    return toks


# ---------------------------------------------------------------------------
# Term parser (precedence: / < * < whisker < atom)
# ---------------------------------------------------------------------------


class _TermParser:
    def __init__(self, toks, lineno):
        self.toks = toks
        self.lineno = lineno
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, text=None):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of line", self.lineno, 0)
        if text is not None and tok[1] != text:
            raise ParseError(f"expected {text!r}, found {tok[1]!r}",
                             self.lineno, tok[2])
        self.pos += 1
        return tok

    def parse(self) -> Term:
        t = self.vterm()
        return t

    def vterm(self) -> Term:
        t = self.hterm()
        while self.peek() and self.peek()[1] == "/":
            self.take()
            t = VComp(t, self.hterm())
        return t

    def hterm(self) -> Term:
        t = self.wterm()
        while self.peek() and self.peek()[1] == "*":
            self.take()
            t = HComp(t, self.wterm())
        return t

    def wterm(self) -> Term:
        t = self.atom()
        while self.peek() and self.peek()[1] in ("<|", "|>"):
            op = self.take()[1]
            rhs = self.atom()
            t = WhiskL(t, rhs) if op == "<|" else WhiskR(t, rhs)
        return t

    def atom(self) -> Term:
        kind, text, col = self.take()
        if text == "(":
            t = self.vterm()
            self.take(")")
            return t
        if text in _RESERVED_CALLS:
            self.take("(")
            first = self.vterm()
            if text == "sigma":
                self.take(",")
                second = self.vterm()
                self.take(")")
                return SigmaLit(first, second)
            self.take(")")
            return {"id_h": IdH, "id_v": IdV,
                    "id_sq_h": IdSqH, "id_sq_v": IdSqV}[text](first)
        if kind == "NAME":
            return Gen(text)
        raise ParseError(f"unexpected {text!r} in term", self.lineno, col)


def parse_term(text: str, lineno: int = 0) -> Term:
    p = _TermParser(_tokenize(text, lineno), lineno)
    t = p.parse()
    if p.peek() is not None:
        raise ParseError(f"trailing input {p.peek()[1]!r}", lineno,
                         p.peek()[2])
    return t


# ---------------------------------------------------------------------------
# Presentation parser
# ---------------------------------------------------------------------------

_REL_DIMS_DOUBLE = {"h", "v", "sq"}
_REL_DIMS_GRAY = {"1", "2", "3"}


def parse_presentation(text: str) -> Presentation:
    """Parse and validate a presentation from its surface syntax.

    Raises :class:`ParseError` on malformed input, UnknownNameError when a
    boundary or relation references an undeclared generator, and
    BoundaryMismatchError when a relation's sides have different boundaries.
    """
    pres: Presentation | None = None
    pending_rels: list[tuple[str, Term, Term, bool, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokenize(raw, lineno)
        if not toks:
            continue
        head = toks[0][1]
        rest = toks[1:]
        if head in ("dblcat", "graycat"):
            if pres is not None:
                raise ParseError("duplicate header", lineno, toks[0][2])
            if len(rest) != 1 or rest[0][0] != "NAME":
                raise ParseError("expected a name after header", lineno, 1)
            pres = Presentation(
                "double" if head == "dblcat" else "gray", rest[0][1])
            continue
        if pres is None:
            raise ParseError("missing dblcat/graycat header", lineno, 1)
        if head == "ob":
            name = _one_name(rest, lineno)
            _declare(pres, name, lineno)
            pres.obs.append(name)
        elif head in ("h", "v", "1"):
            name, src, tgt = _arrow_decl(
                rest, lineno, "~>" if head == "v" else "->")
            _declare(pres, name, lineno)
            for x in (src, tgt):
                if x not in pres.obs:
                    raise UnknownNameError(f"line {lineno}: {x}")
            if head == "h":
                _expect_flavor(pres, "double", lineno)
                pres.h[name] = (src, tgt)
            elif head == "v":
                _expect_flavor(pres, "double", lineno)
                pres.v[name] = (src, tgt)
            else:
                _expect_flavor(pres, "gray", lineno)
                pres.c1[name] = (src, tgt)
        elif head == "sq":
            _expect_flavor(pres, "double", lineno)
            name, fields = _square_decl(rest, lineno)
            _declare(pres, name, lineno)
            pres.sq[name] = (fields["top"], fields["bot"],
                             fields["left"], fields["right"])
        elif head in ("2", "3"):
            _expect_flavor(pres, "gray", lineno)
            sep = "=>" if head == "2" else "~~>"
            name, dom, cod = _cell_decl(rest, lineno, sep)
            _declare(pres, name, lineno)
            (pres.c2 if head == "2" else pres.c3)[name] = (dom, cod)
        elif head == "rel":
            dim, lhs, rhs, oriented = _relation_decl(rest, lineno)
            dims = (_REL_DIMS_DOUBLE if pres.flavor == "double"
                    else _REL_DIMS_GRAY)
            if dim not in dims:
                raise ParseError(f"bad relation dimension {dim!r}",
                                 lineno, 1)
            pending_rels.append((dim, lhs, rhs, oriented, lineno))
        else:
            raise ParseError(f"unknown declaration {head!r}", lineno,
                             toks[0][2])

    if pres is None:
        raise ParseError("empty input", 1, 1)
    _validate(pres, pending_rels)
    return pres


def _declare(pres: Presentation, name: str, lineno: int) -> None:
    if name in pres.locs:
        raise ParseError(f"duplicate name {name!r}", lineno, 1)
    pres.locs[name] = (lineno, 1)


def _expect_flavor(pres, flavor, lineno):
    if pres.flavor != flavor:
        raise ParseError(f"declaration not allowed in {pres.flavor} input",
                         lineno, 1)


def _one_name(toks, lineno) -> str:
    if len(toks) != 1 or toks[0][0] != "NAME":
        raise ParseError("expected exactly one name", lineno, 1)
    return toks[0][1]


def _arrow_decl(toks, lineno, arrow) -> tuple[str, str, str]:
    # NAME : SRC <arrow> TGT
    if (len(toks) != 5 or toks[0][0] != "NAME" or toks[1][1] != ":"
            or toks[2][0] != "NAME" or toks[3][1] != arrow
            or toks[4][0] != "NAME"):
        raise ParseError(f"expected 'NAME : X {arrow} Y'", lineno, 1)
    return toks[0][1], toks[2][1], toks[4][1]


def _square_decl(toks, lineno):
    # NAME : [ top=T left=T right=T bot=T ]
    if len(toks) < 4 or toks[0][0] != "NAME" or toks[1][1] != ":" \
            or toks[2][1] != "[" or toks[-1][1] != "]":
        raise ParseError("expected 'sq NAME : [top=... left=... "
                         "right=... bot=...]'", lineno, 1)
    name = toks[0][1]
    inner = toks[3:-1]
    fields: dict[str, Term] = {}
    i = 0
    while i < len(inner):
        if (i + 1 >= len(inner) or inner[i][0] != "NAME"
                or inner[i + 1][1] != "="):
            raise ParseError("expected 'field=TERM' in square frame",
                             lineno, inner[i][2])
        key = inner[i][1]
        if key not in ("top", "left", "right", "bot"):
            raise ParseError(f"unknown frame field {key!r}", lineno,
                             inner[i][2])
        j = i + 2
        depth = 0
        while j < len(inner):
            t = inner[j][1]
            if t == "(":
                depth += 1
            elif t == ")":
                depth -= 1
            elif depth == 0 and inner[j][0] == "NAME" \
                    and j + 1 < len(inner) and inner[j + 1][1] == "=":
                break
            j += 1
        sub = _TermParser(inner[i + 2:j], lineno)
        fields[key] = sub.parse()
        if sub.peek() is not None:
            raise ParseError("trailing input in frame field", lineno,
                             sub.peek()[2])
        i = j
    missing = {"top", "left", "right", "bot"} - set(fields)
    if missing:
        raise ParseError(f"frame fields missing: {sorted(missing)}",
                         lineno, 1)
    return name, fields


def _cell_decl(toks, lineno, sep):
    if len(toks) < 4 or toks[0][0] != "NAME" or toks[1][1] != ":":
        raise ParseError(f"expected 'NAME : TERM {sep} TERM'", lineno, 1)
    name = toks[0][1]
    split = None
    depth = 0
    for i, t in enumerate(toks[2:], start=2):
        if t[1] == "(":
            depth += 1
        elif t[1] == ")":
            depth -= 1
        elif t[1] == sep and depth == 0:
            split = i
            break
    if split is None:
        raise ParseError(f"missing {sep!r}", lineno, 1)
    dom = _parse_tok_term(toks[2:split], lineno)
    cod = _parse_tok_term(toks[split + 1:], lineno)
    return name, dom, cod


def _relation_decl(toks, lineno):
    # DIM : TERM (= | ->) TERM
    if len(toks) < 4 or toks[1][1] != ":":
        raise ParseError("expected 'rel DIM: TERM = TERM'", lineno, 1)
    dim = toks[0][1]
    split = None
    oriented = False
    depth = 0
    for i, t in enumerate(toks[2:], start=2):
        if t[1] == "(":
            depth += 1
        elif t[1] == ")":
            depth -= 1
        elif depth == 0 and t[1] in ("=", "->"):
            split = i
            oriented = t[1] == "->"
            break
    if split is None:
        raise ParseError("missing '=' in relation", lineno, 1)
    lhs = _parse_tok_term(toks[2:split], lineno)
    rhs = _parse_tok_term(toks[split + 1:], lineno)
    return dim, lhs, rhs, oriented


def _parse_tok_term(toks, lineno) -> Term:
    p = _TermParser(toks, lineno)
    t = p.parse()
    if p.peek() is not None:
        raise ParseError(f"trailing input {p.peek()[1]!r}", lineno,
                         p.peek()[2])
    return t


def _validate(pres: Presentation, rels) -> None:
    if pres.flavor == "double":
        sig = pres.signature()
        for q in pres.sq:
            sig.sq_boundary(Gen(q))
        for dim, lhs, rhs, oriented, lineno in rels:
            for t in (lhs, rhs):
                for g in _term_gens(t):
                    if g not in pres.locs:
                        raise UnknownNameError(f"line {lineno}: {g}")
            want = {"h": "h", "v": "v", "sq": "sq"}[dim]
            for t in (lhs, rhs):
                k = sig.check(t)
                if k != want:
                    raise BoundaryMismatchError(
                        f"line {lineno}: relation sides must be {want}-cells")
            if want == "h":
                if sig.hpath(lhs)[0::2] != sig.hpath(rhs)[0::2]:
                    raise BoundaryMismatchError(f"line {lineno}: endpoints")
            elif want == "v":
                if sig.vpath(lhs)[0::2] != sig.vpath(rhs)[0::2]:
                    raise BoundaryMismatchError(f"line {lineno}: endpoints")
            else:
                a, b = sig.sq_boundary(lhs), sig.sq_boundary(rhs)
                if a != b:
                    raise BoundaryMismatchError(
                        f"line {lineno}: square boundaries differ")
            pres.relations.append(Relation(dim, lhs, rhs, oriented))
    else:
        known = set(pres.obs) | set(pres.c1) | set(pres.c2) | set(pres.c3)
        for name, (d, c) in list(pres.c2.items()) + list(pres.c3.items()):
            for t in (d, c):
                for g in _term_gens(t):
                    if g not in known:
                        raise UnknownNameError(g)
        for dim, lhs, rhs, oriented, lineno in rels:
            for t in (lhs, rhs):
                for g in _term_gens(t):
                    if g not in known:
                        raise UnknownNameError(f"line {lineno}: {g}")
            pres.relations.append(Relation(dim, lhs, rhs, oriented))


def _term_gens(t: Term):
    from .terms import gens_of
    return gens_of(t)
