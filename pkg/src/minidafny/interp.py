"""Definitional interpreter: contexts, outcomes, and statement evaluation."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Union

from .ast import Assign, Bind, BinOp, Const, Op, Seq, Stmt, Var, check_var_name


class Context(dict):
    """Finite map from variable names to integers, used immutably.

    Every operation below returns a fresh context; nothing mutates one in
    place. The hash is cached, so a context must not change once built.
    """

    __slots__ = ("_hash",)

    def __hash__(self) -> int:  # type: ignore[override]
        try:
            return self._hash
        except AttributeError:
            h = hash(frozenset(self.items()))
            self._hash = h
            return h

    def assoc(self, name: str, value: int) -> "Context":
        """Copy of this context with one binding added or replaced."""
        out = Context(self)
        dict.__setitem__(out, name, value)
        return out


@dataclass(frozen=True)
class Success:
    value: int
    ctx: Context


@dataclass(frozen=True)
class Failure:
    # The first variable, in evaluation order, found unbound.
    undefined: str


Outcome = Union[Success, Failure]


def ctx_remove(ctx: Context, names: Iterable[str]) -> Context:
    """Context without the given keys; absent keys are ignored."""
    drop = set(names)
    return Context((k, v) for k, v in ctx.items() if k not in drop)


def ctx_override(left: Context, right: Context) -> Context:
    """Union of two contexts; on shared keys the right-hand value wins."""
    out = Context(left)
    dict.update(out, right)
    return out


def interp_stmt(s: Stmt, ctx: Context) -> Outcome:
    """Evaluate a statement in a context.

    Every statement yields an integer value plus an updated context; the
    only failure mode is touching an unbound variable, and failures
    propagate immediately. Assignment requires the target to exist
    already. A Bind's binding never escapes: once the body has run, the
    bound name is reset to its outer value, or removed if it was fresh.
    An empty sequence yields 0 and leaves the context alone.
    """
    match s:
        case Const(value):
            return Success(value, ctx)
        case Var(name):
            if name in ctx:
                return Success(ctx[name], ctx)
            return Failure(name)
        case BinOp(op, lhs, rhs):
            left = interp_stmt(lhs, ctx)
            if isinstance(left, Failure):
                return left
            right = interp_stmt(rhs, left.ctx)
            if isinstance(right, Failure):
                return right
            if op is Op.ADD:
                return Success(left.value + right.value, right.ctx)
            return Success(left.value * right.value, right.ctx)
        case Assign(avar, aval):
            out = interp_stmt(aval, ctx)
            if isinstance(out, Failure):
                return out
            if avar not in out.ctx:
                return Failure(avar)
            return Success(out.value, out.ctx.assoc(avar, out.value))
        case Bind(bvar, bval, body):
            bound = interp_stmt(bval, ctx)
            if isinstance(bound, Failure):
                return bound
            ctx1 = bound.ctx
            inner = interp_stmt(body, ctx1.assoc(bvar, bound.value))
            if isinstance(inner, Failure):
                return inner
            return Success(inner.value, ctx_override(ctx1, ctx_remove(inner.ctx, (bvar,))))
        case Seq(stmts):
            value = 0
            for t in stmts:
                out = interp_stmt(t, ctx)
                if isinstance(out, Failure):
                    return out
                value, ctx = out.value, out.ctx
            return Success(value, ctx)
    raise TypeError(f"not a Stmt: {s!r}")


def context_to_json(ctx: Context) -> str:
    """Flat JSON object of name -> integer, keys sorted."""
    return json.dumps({k: ctx[k] for k in sorted(ctx)})


def context_from_json(text: str) -> Context:
    """Parse the flat name -> integer JSON encoding, validating names."""
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("context must be a JSON object of name -> integer")
    for name, value in data.items():
        check_var_name(name)
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"context value for {name!r} must be an integer")
    return Context(data)
