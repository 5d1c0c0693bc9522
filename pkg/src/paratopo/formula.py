"""Formulas of the three-negation modal language.

Concrete syntax (ASCII)::

    formula := or ;  or := and ('|' and)* ;  and := unary ('&' unary)* ;
    unary   := '!' unary | '~' unary | '-' unary | '[]' unary | '<>' unary | atom ;
    atom    := ident | 'T' | 'F' | '(' formula ')'

``!`` is classical negation, ``~`` the closed-complement (paraconsistent)
negation and ``-`` the open-complement (paracomplete) negation.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import FormulaSyntaxError, ModeMismatch


class Mode(str, enum.Enum):
    CLASSICAL = "classical"
    PARACONSISTENT = "paraconsistent"
    PARACOMPLETE = "paracomplete"

    def __str__(self) -> str:
        return self.value


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Prop(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class ClassNeg(Formula):
    operand: Formula


@dataclass(frozen=True)
class ParaNeg(Formula):
    operand: Formula


@dataclass(frozen=True)
class CompNeg(Formula):
    operand: Formula


@dataclass(frozen=True)
class Box(Formula):
    operand: Formula


@dataclass(frozen=True)
class Diamond(Formula):
    operand: Formula


UNARY_SYMBOL = {ClassNeg: "!", ParaNeg: "~", CompNeg: "-", Box: "[]", Diamond: "<>"}
SYMBOL_UNARY = {v: k for k, v in UNARY_SYMBOL.items()}
NEGATIONS = (ClassNeg, ParaNeg, CompNeg)
MODE_NEGATION = {
    Mode.CLASSICAL: ClassNeg,
    Mode.PARACONSISTENT: ParaNeg,
    Mode.PARACOMPLETE: CompNeg,
}

PROP_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


def is_prop_name(name: str) -> bool:
    return bool(PROP_RE.match(name))


# --- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\[\]|<>|[!~\-&|()TF]|[a-z][a-z0-9_]*")


def _tokenize(text: str):
    toks = []
    line, col, i = 1, 1, 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {ch!r}", line, col)
        tok = m.group()
        # 'T'/'F' followed by identifier characters is not a constant
        if tok in ("T", "F") and i + 1 < len(text) and (text[i + 1].isalnum() or text[i + 1] == "_"):
            raise FormulaSyntaxError(f"unexpected character {text[i + 1]!r}", line, col + 1)
        toks.append((tok, line, col))
        col += len(tok)
        i = m.end()
    toks.append(("<eof>", line, col))
    return toks


_ATOM_START = ("identifier", "T", "F", "(")
_UNARY_START = ("!", "~", "-", "[]", "<>")


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self) -> str:
        return self.toks[self.pos][0]

    def fail(self, expected) -> FormulaSyntaxError:
        tok, line, col = self.toks[self.pos]
        what = "end of input" if tok == "<eof>" else f"token {tok!r}"
        return FormulaSyntaxError(f"unexpected {what}", line, col, expected)

    def parse(self) -> Formula:
        f = self.or_()
        if self.peek() != "<eof>":
            raise self.fail(("&", "|", "<eof>"))
        return f

    def or_(self) -> Formula:
        f = self.and_()
        while self.peek() == "|":
            self.pos += 1
            f = Or(f, self.and_())
        return f

    def and_(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.pos += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok in SYMBOL_UNARY:
            self.pos += 1
            return SYMBOL_UNARY[tok](self.unary())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok == "T":
            self.pos += 1
            return Top()
        if tok == "F":
            self.pos += 1
            return Bot()
        if tok == "(":
            self.pos += 1
            f = self.or_()
            if self.peek() != ")":
                raise self.fail((")", "&", "|"))
            self.pos += 1
            return f
        if PROP_RE.match(tok):
            self.pos += 1
            return Prop(tok)
        raise self.fail(_UNARY_START + _ATOM_START)


def parse(text: str) -> Formula:
    """Parse ``text``; raises :class:`FormulaSyntaxError` on malformed input."""
    return _Parser(text).parse()


# --- printing ----------------------------------------------------------------

def _prec(f: Formula) -> int:
    if isinstance(f, Or):
        return 1
    if isinstance(f, And):
        return 2
    return 3


def render(f: Formula) -> str:
    """Render with as few parentheses as still round-trip through :func:`parse`."""
    if isinstance(f, Prop):
        return f.name
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Bot):
        return "F"
    if isinstance(f, (And, Or)):
        p = _prec(f)
        op = " & " if isinstance(f, And) else " | "
        left = render(f.left)
        right = render(f.right)
        if _prec(f.left) < p:
            left = f"({left})"
        if _prec(f.right) <= p:
            right = f"({right})"
        return left + op + right
    sym = UNARY_SYMBOL[type(f)]
    inner = render(f.operand)
    if _prec(f.operand) < 3:
        inner = f"({inner})"
    return sym + inner


# --- structural measures -------------------------------------------------------

def modal_depth(f: Formula) -> int:
    """Nesting depth of [] / <> / ~ / -; classical negation adds nothing."""
    if isinstance(f, (Prop, Top, Bot)):
        return 0
    if isinstance(f, (And, Or)):
        return max(modal_depth(f.left), modal_depth(f.right))
    if isinstance(f, ClassNeg):
        return modal_depth(f.operand)
    return 1 + modal_depth(f.operand)


def subformulas(f: Formula):
    yield f
    if isinstance(f, (And, Or)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif not isinstance(f, (Prop, Top, Bot)):
        yield from subformulas(f.operand)


def negation_symbols(f: Formula) -> set[str]:
    return {UNARY_SYMBOL[type(g)] for g in subformulas(f) if isinstance(g, NEGATIONS)}


def is_positive(f: Formula) -> bool:
    return not negation_symbols(f)


def props_of(f: Formula) -> set[str]:
    return {g.name for g in subformulas(f) if isinstance(g, Prop)}


def size(f: Formula) -> int:
    return sum(1 for _ in subformulas(f))


def check_mode(f: Formula, mode: Mode) -> None:
    """Raise :class:`ModeMismatch` if ``f`` uses a negation foreign to ``mode``."""
    allowed = UNARY_SYMBOL[MODE_NEGATION[Mode(mode)]]
    bad = negation_symbols(f) - {allowed}
    if bad:
        raise ModeMismatch(Mode(mode), bad)


def is_well_moded(f: Formula, mode: Mode) -> bool:
    allowed = UNARY_SYMBOL[MODE_NEGATION[Mode(mode)]]
    return negation_symbols(f) <= {allowed}


# --- enumeration ---------------------------------------------------------------

def enumerate_formulas(
    props: Iterable[str],
    max_depth: int,
    max_count: int,
    mode: Mode = Mode.PARACONSISTENT,
    include_constants: bool = False,
) -> list[Formula]:
    """Well-moded formulas of depth <= ``max_depth``, by size then rendered text.

    Deterministic for fixed arguments; stops after ``max_count`` formulas.
    """
    if max_count < 1:
        raise ValueError("max_count must be at least 1")
    atoms: list[Formula] = [Prop(p) for p in props]
    if include_constants:
        atoms += [Top(), Bot()]
    if not atoms:
        return []
    unaries = (MODE_NEGATION[Mode(mode)], Box, Diamond)
    levels: list[list[tuple[Formula, int]]] = [[]]
    out: list[Formula] = []
    s = 0
    while len(out) < max_count:
        s += 1
        level: list[tuple[Formula, int]] = []
        if s == 1:
            level = [(a, 0) for a in atoms]
        else:
            if max_depth > 0:
                for g, d in levels[s - 1]:
                    if d < max_depth:
                        level.extend((op(g), d + 1) for op in unaries)
            for i in range(1, s - 1):
                for a, da in levels[i]:
                    for b, db in levels[s - 1 - i]:
                        d = max(da, db)
                        level.append((And(a, b), d))
                        level.append((Or(a, b), d))
        level.sort(key=lambda fd: render(fd[0]))
        levels.append(level)
        for g, _ in level:
            out.append(g)
            if len(out) == max_count:
                break
    return out
