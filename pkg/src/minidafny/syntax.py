"""Concrete syntax: recursive-descent parser and pretty-printer.

The two form a bijection on normal-form trees. Grammar, loosest binding
first (whitespace and ``//`` line comments are insignificant between
tokens; this is also the ``.mdfy`` file format, UTF-8):

    program := seq EOF
    seq     := stmt (";" stmt)*          # one element is the stmt itself
    stmt    := "var" IDENT ":=" stmt "in" stmt
             | IDENT ":=" stmt           # right-nested
             | add
    add     := mul ("+" mul)*            # left-associative
    mul     := atom ("*" atom)*          # left-associative
    atom    := INT | IDENT | "skip" | "(" seq ")"
    INT     := "-"? [0-9]+

``skip`` is the empty sequence. A minus sign is only legal as a literal
prefix; there is no subtraction operator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ast import KEYWORDS, Assign, Bind, BinOp, Const, Op, Seq, Stmt, Var, seq_of


@dataclass(frozen=True)
class SourcePos:
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class ParseError(Exception):
    """Raised on any token or grammar violation, with a 1-based position."""

    def __init__(self, pos: SourcePos, message: str, expected: tuple[str, ...] = ()):
        super().__init__(f"parse error at {pos}: {message}")
        self.pos = pos
        self.message = message
        self.expected = tuple(expected)


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "ident", a keyword, a punctuation string, or "eof"
    value: object
    pos: SourcePos


_PUNCT = {";", "+", "*", "(", ")"}


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if c in " \t\r":
            i, col = i + 1, col + 1
            continue
        if text.startswith("//", i):
            while i < n and text[i] != "\n":
                i += 1
            continue
        pos = SourcePos(line, col)
        if c.isdigit() or c == "-":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if c == "-" and j == i + 1:
                raise ParseError(pos, "'-' must be followed by digits", ("integer literal",))
            tokens.append(_Token("int", int(text[i:j]), pos))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = word if word in KEYWORDS else "ident"
            tokens.append(_Token(kind, word, pos))
            col += j - i
            i = j
            continue
        if c == ":":
            if text.startswith(":=", i):
                tokens.append(_Token(":=", ":=", pos))
                i, col = i + 2, col + 2
                continue
            raise ParseError(pos, "':' must be part of ':='", ("':='",))
        if c in _PUNCT:
            tokens.append(_Token(c, c, pos))
            i, col = i + 1, col + 1
            continue
        raise ParseError(pos, f"unexpected character {c!r}")
    tokens.append(_Token("eof", None, SourcePos(line, col)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self._tokens = tokens
        self._i = 0

    def _peek(self, ahead: int = 0) -> _Token:
        return self._tokens[min(self._i + ahead, len(self._tokens) - 1)]

    def _advance(self) -> _Token:
        tok = self._tokens[self._i]
        self._i += 1
        return tok

    def _expect(self, kind: str, describe: str) -> _Token:
        tok = self._peek()
        if tok.kind != kind:
            raise ParseError(tok.pos, f"expected {describe}, found {self._describe(tok)}", (describe,))
        return self._advance()

    @staticmethod
    def _describe(tok: _Token) -> str:
        if tok.kind == "eof":
            return "end of input"
        return f"{tok.value!r}"

    def program(self) -> Stmt:
        s = self._seq()
        self._expect("eof", "end of input")
        return s

    def _seq(self) -> Stmt:
        items = [self._stmt()]
        while self._peek().kind == ";":
            self._advance()
            items.append(self._stmt())
        return seq_of(items)

    def _stmt(self) -> Stmt:
        tok = self._peek()
        if tok.kind == "var":
            self._advance()
            name = self._expect("ident", "an identifier")
            self._expect(":=", "':='")
            bval = self._stmt()
            self._expect("in", "'in'")
            body = self._stmt()
            return Bind(name.value, bval, body)
        if tok.kind == "ident" and self._peek(1).kind == ":=":
            self._advance()
            self._advance()
            return Assign(tok.value, self._stmt())
        return self._add()

    def _add(self) -> Stmt:
        left = self._mul()
        while self._peek().kind == "+":
            self._advance()
            left = BinOp(Op.ADD, left, self._mul())
        return left

    def _mul(self) -> Stmt:
        left = self._atom()
        while self._peek().kind == "*":
            self._advance()
            left = BinOp(Op.MUL, left, self._atom())
        return left

    def _atom(self) -> Stmt:
        tok = self._peek()
        if tok.kind == "int":
            self._advance()
            return Const(tok.value)
        if tok.kind == "ident":
            self._advance()
            return Var(tok.value)
        if tok.kind == "skip":
            self._advance()
            return Seq(())
        if tok.kind == "(":
            self._advance()
            inner = self._seq()
            self._expect(")", "')'")
            return inner
        raise ParseError(
            tok.pos,
            f"expected a statement, found {self._describe(tok)}",
            ("integer literal", "identifier", "'skip'", "'var'", "'('"),
        )


def parse(text: str) -> Stmt:
    """Parse a program, raising :class:`ParseError` on any violation."""
    return _Parser(_tokenize(text)).program()


# Precedence levels for printing, loosest to tightest. A node whose level
# is below what its position requires gets parenthesized.
_SEQ, _STMT, _ADD, _MUL, _ATOM = 0, 1, 2, 3, 4


def pretty_print(s: Stmt) -> str:
    """Minimal-parenthesization rendering; inverse of :func:`parse`."""
    return _pp(s, _SEQ)


def _wrap(text: str, level: int, want: int) -> str:
    return f"({text})" if level < want else text


def _pp(s: Stmt, want: int) -> str:
    match s:
        case Const(value):
            return _wrap(str(value), _ATOM, want)
        case Var(name):
            return _wrap(name, _ATOM, want)
        case BinOp(op, lhs, rhs):
            if op is Op.ADD:
                return _wrap(f"{_pp(lhs, _ADD)} + {_pp(rhs, _MUL)}", _ADD, want)
            return _wrap(f"{_pp(lhs, _MUL)} * {_pp(rhs, _ATOM)}", _MUL, want)
        case Assign(avar, aval):
            return _wrap(f"{avar} := {_pp(aval, _STMT)}", _STMT, want)
        case Bind(bvar, bval, body):
            return _wrap(f"var {bvar} := {_pp(bval, _STMT)} in {_pp(body, _STMT)}", _STMT, want)
        case Seq(()):
            return _wrap("skip", _ATOM, want)
        case Seq(stmts):
            return _wrap("; ".join(_pp(t, _STMT) for t in stmts), _SEQ, want)
    raise TypeError(f"not a Stmt: {s!r}")
