"""Abstract syntax trees for the mini-Dafny statement language.

Statements and expressions share a single tree: every node evaluates to an
integer value and may update the variable context. ``Seq`` takes any number
of statements; the normal form forbids one-element sequences so that trees
and concrete syntax stay in bijection.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

KEYWORDS = frozenset({"var", "in", "skip"})

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def check_var_name(name: str) -> str:
    """Validate a variable name and return it unchanged.

    Names match ``[A-Za-z_][A-Za-z0-9_]*`` and must not be keywords.
    """
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise ValueError(f"invalid variable name: {name!r}")
    if name in KEYWORDS:
        raise ValueError(f"variable name collides with a keyword: {name!r}")
    return name


def _cached_hash(self) -> int:
    # Statement trees are used as memo-table keys millions of times; the
    # structural hash is cached per node after the first computation.
    try:
        return self._hash
    except AttributeError:
        h = hash((self.__class__,) + tuple(getattr(self, f) for f in self.__match_args__))
        object.__setattr__(self, "_hash", h)
        return h


class Stmt:
    """Base class of all statement nodes. Instances are immutable."""

    __match_args__: tuple = ()


class Op(Enum):
    """Binary operators: integer addition and multiplication."""

    ADD = "+"
    MUL = "*"


@dataclass(frozen=True)
class Const(Stmt):
    value: int

    __hash__ = _cached_hash


@dataclass(frozen=True)
class Var(Stmt):
    name: str

    __hash__ = _cached_hash

    def __post_init__(self):
        check_var_name(self.name)


@dataclass(frozen=True)
class BinOp(Stmt):
    op: Op
    lhs: Stmt
    rhs: Stmt

    __hash__ = _cached_hash


@dataclass(frozen=True)
class Assign(Stmt):
    avar: str
    aval: Stmt

    __hash__ = _cached_hash

    def __post_init__(self):
        check_var_name(self.avar)


@dataclass(frozen=True)
class Bind(Stmt):
    bvar: str
    bval: Stmt
    body: Stmt

    __hash__ = _cached_hash

    def __post_init__(self):
        check_var_name(self.bvar)


@dataclass(frozen=True)
class Seq(Stmt):
    stmts: tuple[Stmt, ...]

    __hash__ = _cached_hash

    def __post_init__(self):
        object.__setattr__(self, "stmts", tuple(self.stmts))
        if len(self.stmts) == 1:
            raise ValueError("Seq normal form forbids one-element sequences")


def seq_of(stmts: Iterable[Stmt]) -> Stmt:
    """Sequence in normal form: a singleton collapses to its one element."""
    items = tuple(stmts)
    if len(items) == 1:
        return items[0]
    return Seq(items)


def depth(s: Stmt) -> int:
    """Tree depth: leaves are 0, any other node is one above its children.

    ``Seq(())`` has depth 1 (a constructor applied to no children).
    """
    match s:
        case Const(_) | Var(_):
            return 0
        case BinOp(_, lhs, rhs):
            return 1 + max(depth(lhs), depth(rhs))
        case Assign(_, aval):
            return 1 + depth(aval)
        case Bind(_, bval, body):
            return 1 + max(depth(bval), depth(body))
        case Seq(stmts):
            return 1 + max((depth(t) for t in stmts), default=0)
    raise TypeError(f"not a Stmt: {s!r}")


def var_names(s: Stmt) -> frozenset[str]:
    """Every variable name occurring in ``s``: read, assigned, or bound."""
    match s:
        case Const(_):
            return frozenset()
        case Var(name):
            return frozenset((name,))
        case BinOp(_, lhs, rhs):
            return var_names(lhs) | var_names(rhs)
        case Assign(avar, aval):
            return var_names(aval) | {avar}
        case Bind(bvar, bval, body):
            return var_names(bval) | var_names(body) | {bvar}
        case Seq(stmts):
            return frozenset().union(*(var_names(t) for t in stmts))
    raise TypeError(f"not a Stmt: {s!r}")
