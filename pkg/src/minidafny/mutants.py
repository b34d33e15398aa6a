"""Seeded single-rule bugs for exercising failure localization.

Each mutant swaps exactly one rule relative to the reference behavior;
everything else is copied verbatim. A verification run over a mutant must
therefore fail, and the failing obligations must point at the inductive
case covering the altered rule — that localization is what the acceptance
suite pins down.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .ast import Assign, Bind, BinOp, Const, Op, Seq, Stmt, Var
from .instances import REFERENCE, Behavior
from .interp import Context, Failure, Outcome, Success, ctx_override, ctx_remove

_ZERO = Const(0)


class UnknownMutantError(ValueError):
    pass


def _interp_no_scope_reset(s: Stmt, ctx: Context) -> Outcome:
    # Copy of interp_stmt where Bind keeps the body's final context as-is:
    # the bound variable escapes its scope.
    match s:
        case Const(value):
            return Success(value, ctx)
        case Var(name):
            if name in ctx:
                return Success(ctx[name], ctx)
            return Failure(name)
        case BinOp(op, lhs, rhs):
            left = _interp_no_scope_reset(lhs, ctx)
            if isinstance(left, Failure):
                return left
            right = _interp_no_scope_reset(rhs, left.ctx)
            if isinstance(right, Failure):
                return right
            if op is Op.ADD:
                return Success(left.value + right.value, right.ctx)
            return Success(left.value * right.value, right.ctx)
        case Assign(avar, aval):
            out = _interp_no_scope_reset(aval, ctx)
            if isinstance(out, Failure):
                return out
            if avar not in out.ctx:
                return Failure(avar)
            return Success(out.value, out.ctx.assoc(avar, out.value))
        case Bind(bvar, bval, body):
            bound = _interp_no_scope_reset(bval, ctx)
            if isinstance(bound, Failure):
                return bound
            inner = _interp_no_scope_reset(body, bound.ctx.assoc(bvar, bound.value))
            if isinstance(inner, Failure):
                return inner
            return Success(inner.value, inner.ctx)  # seeded bug: no scope reset
        case Seq(stmts):
            value = 0
            for t in stmts:
                out = _interp_no_scope_reset(t, ctx)
                if isinstance(out, Failure):
                    return out
                value, ctx = out.value, out.ctx
            return Success(value, ctx)
    raise TypeError(f"not a Stmt: {s!r}")


def _is_pure_drop_locals_check(s: Stmt, locals: frozenset[str] = frozenset()) -> bool:
    # Copy of is_pure whose Assign clause forgets to require the target to
    # be a local.
    match s:
        case Const(_) | Var(_):
            return True
        case BinOp(_, lhs, rhs):
            return _is_pure_drop_locals_check(lhs, locals) and _is_pure_drop_locals_check(rhs, locals)
        case Assign(_, aval):
            return _is_pure_drop_locals_check(aval, locals)  # seeded bug: no avar check
        case Bind(bvar, bval, body):
            return _is_pure_drop_locals_check(bval, locals) and _is_pure_drop_locals_check(
                body, locals | {bvar}
            )
        case Seq(stmts):
            return all(_is_pure_drop_locals_check(t, locals) for t in stmts)
    raise TypeError(f"not a Stmt: {s!r}")


def _eliminate_mul_zero_rewrite_impure(s: Stmt) -> Stmt:
    # Copy of eliminate_mul_zero without the purity guard: a zero operand
    # deletes its sibling even when the sibling has side effects.
    match s:
        case Const(_) | Var(_):
            return s
        case BinOp(op, lhs, rhs):
            lhs2 = _eliminate_mul_zero_rewrite_impure(lhs)
            rhs2 = _eliminate_mul_zero_rewrite_impure(rhs)
            if op is Op.MUL and (lhs2 == _ZERO or rhs2 == _ZERO):  # seeded bug: no purity guard
                return _ZERO
            if lhs2 is lhs and rhs2 is rhs:
                return s
            return BinOp(op, lhs2, rhs2)
        case Assign(avar, aval):
            aval2 = _eliminate_mul_zero_rewrite_impure(aval)
            return s if aval2 is aval else Assign(avar, aval2)
        case Bind(bvar, bval, body):
            bval2 = _eliminate_mul_zero_rewrite_impure(bval)
            body2 = _eliminate_mul_zero_rewrite_impure(body)
            if bval2 is bval and body2 is body:
                return s
            return Bind(bvar, bval2, body2)
        case Seq(stmts):
            rewritten = tuple(_eliminate_mul_zero_rewrite_impure(t) for t in stmts)
            if all(a is b for a, b in zip(rewritten, stmts)):
                return s
            return Seq(rewritten)
    raise TypeError(f"not a Stmt: {s!r}")


def _app_list_snoc(l0: tuple, l1: tuple) -> tuple:
    # Copy of app_list whose recursive case appends the head at the end.
    if not l0:
        return l1
    return _app_list_snoc(l0[1:], l1) + (l0[0],)  # seeded bug: snoc, not cons


@dataclass(frozen=True)
class Mutant:
    name: str
    description: str
    target: str  # which module's rule the mutant replaces
    behavior: Behavior


MUTANTS: dict[str, Mutant] = {
    m.name: m
    for m in (
        Mutant(
            "no-scope-reset",
            "Bind keeps the body's final context; the binding escapes its scope",
            "interp",
            replace(REFERENCE, interp=_interp_no_scope_reset),
        ),
        Mutant(
            "drop-locals-check",
            "is_pure's Assign clause no longer requires the target to be local",
            "analysis",
            replace(REFERENCE, is_pure=_is_pure_drop_locals_check),
        ),
        Mutant(
            "rewrite-impure",
            "the multiply-by-zero pass rewrites even when the operand has effects",
            "passes",
            replace(REFERENCE, eliminate_mul_zero=_eliminate_mul_zero_rewrite_impure),
        ),
        Mutant(
            "app-snoc",
            "append's recursive case moves the head to the end of the list",
            "instances",
            replace(REFERENCE, app_list=_app_list_snoc),
        ),
    )
}


def apply_mutant(name: "str | None") -> Behavior:
    """Behavior bundle for a registered mutant; None gives the reference."""
    if name is None:
        return REFERENCE
    try:
        return MUTANTS[name].behavior
    except KeyError:
        valid = ", ".join(sorted(MUTANTS))
        raise UnknownMutantError(f"unknown mutant {name!r}; valid names: {valid}") from None
