"""The multiply-by-zero elimination micro-pass."""

from __future__ import annotations

from .analysis import is_pure
from .ast import Assign, Bind, BinOp, Const, Op, Seq, Stmt, Var

_ZERO = Const(0)


def eliminate_mul_zero(s: Stmt) -> Stmt:
    """Rewrite ``0 * t`` and ``t * 0`` to ``0`` wherever ``t`` is pure.

    Children are rewritten first, so nested opportunities collapse in one
    pass; the result stays in Seq normal form and the pass is idempotent.
    The purity guard keeps side-effecting operands alive: ``0 * (x := 1)``
    is left alone.
    """
    match s:
        case Const(_) | Var(_):
            return s
        case BinOp(op, lhs, rhs):
            lhs2 = eliminate_mul_zero(lhs)
            rhs2 = eliminate_mul_zero(rhs)
            if op is Op.MUL:
                if lhs2 == _ZERO and is_pure(rhs2):
                    return _ZERO
                if rhs2 == _ZERO and is_pure(lhs2):
                    return _ZERO
            if lhs2 is lhs and rhs2 is rhs:
                return s
            return BinOp(op, lhs2, rhs2)
        case Assign(avar, aval):
            aval2 = eliminate_mul_zero(aval)
            return s if aval2 is aval else Assign(avar, aval2)
        case Bind(bvar, bval, body):
            bval2 = eliminate_mul_zero(bval)
            body2 = eliminate_mul_zero(body)
            if bval2 is bval and body2 is body:
                return s
            return Bind(bvar, bval2, body2)
        case Seq(stmts):
            rewritten = tuple(eliminate_mul_zero(t) for t in stmts)
            if all(a is b for a, b in zip(rewritten, stmts)):
                return s
            return Seq(rewritten)
    raise TypeError(f"not a Stmt: {s!r}")
