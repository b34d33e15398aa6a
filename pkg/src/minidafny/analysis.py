"""Syntactic effect analyses: purity and single-variable preservation."""

from __future__ import annotations

from .ast import Assign, Bind, BinOp, Const, Seq, Stmt, Var


def is_pure(s: Stmt, locals: frozenset[str] = frozenset()) -> bool:
    """True when ``s`` updates no variables outside ``locals``.

    A Bind adds its bound name to the allowed set for its body, so updates
    to locally scoped variables do not count as effects; with the default
    empty set, a pure statement has no observable side effects at all.
    """
    match s:
        case Const(_) | Var(_):
            return True
        case BinOp(_, lhs, rhs):
            return is_pure(lhs, locals) and is_pure(rhs, locals)
        case Assign(avar, aval):
            return avar in locals and is_pure(aval, locals)
        case Bind(bvar, bval, body):
            return is_pure(bval, locals) and is_pure(body, locals | {bvar})
        case Seq(stmts):
            return all(is_pure(t, locals) for t in stmts)
    raise TypeError(f"not a Stmt: {s!r}")


def unchanged_var(s: Stmt, name: str) -> bool:
    """True when evaluating ``s`` cannot change the value bound to ``name``.

    Subtle point: a Bind that shadows ``name`` restores it on exit, so its
    body may do anything to the shadowed variable.
    """
    match s:
        case Const(_) | Var(_):
            return True
        case BinOp(_, lhs, rhs):
            return unchanged_var(lhs, name) and unchanged_var(rhs, name)
        case Assign(avar, aval):
            return avar != name and unchanged_var(aval, name)
        case Bind(bvar, bval, body):
            return unchanged_var(bval, name) and (bvar == name or unchanged_var(body, name))
        case Seq(stmts):
            return all(unchanged_var(t, name) for t in stmts)
    raise TypeError(f"not a Stmt: {s!r}")
