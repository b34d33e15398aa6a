"""Concrete induction-checkable properties.

Four instantiations of the obligation harness: purity soundness,
single-variable preservation, correctness of the multiply-by-zero pass
(as success-refinement), and associativity of list append.

Each statement instance is built against a :class:`Behavior` bundle so the
fault-injection mutants can swap exactly one rule; the default bundle is
the reference implementation. Instances memoize interpretation internally
— they stay pure, just faster on the corpus-scale workloads the harness
runs.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass
from typing import Callable

from .analysis import is_pure, unchanged_var
from .ast import Stmt
from .gen import CorpusSpec, enum_contexts, enum_subsets
from .induction import ListInductionInstance, StmtInductionInstance
from .interp import Context, Failure, Outcome, Success, ctx_remove, interp_stmt
from .passes import eliminate_mul_zero

_MEMO_SIZE = 1 << 20


@dataclass(frozen=True)
class Behavior:
    """The rule set instances run against; mutants replace one slot."""

    interp: Callable[[Stmt, Context], Outcome]
    is_pure: Callable[..., bool]
    eliminate_mul_zero: Callable[[Stmt], Stmt]
    app_list: Callable[[tuple, tuple], tuple]


def app_list(l0: tuple, l1: tuple) -> tuple:
    """List concatenation by structural recursion on the first list."""
    if not l0:
        return l1
    return (l0[0],) + app_list(l0[1:], l1)


REFERENCE = Behavior(interp_stmt, is_pure, eliminate_mul_zero, app_list)


@dataclass(frozen=True)
class PureState:
    """State for the purity property: the allowed locals plus a context."""

    locals: frozenset[str]
    ctx: Context


@dataclass(frozen=True)
class UnchangedState:
    """State for the preservation property: the watched name plus a context."""

    watched: str
    ctx: Context


def same_ctxs(locals: frozenset[str], ctx: Context, ctx1: Context) -> bool:
    """Context equality up to ``locals``: equal key sets, equal bindings
    outside the locals."""
    return ctx1.keys() == ctx.keys() and ctx_remove(ctx1, locals) == ctx_remove(ctx, locals)


def _ctx_json(ctx: Context) -> dict:
    return {k: ctx[k] for k in sorted(ctx)}


def _show_pure_state(st: PureState) -> str:
    return json.dumps({"locals": sorted(st.locals), "ctx": _ctx_json(st.ctx)})


def _read_pure_state(text: str) -> PureState:
    data = json.loads(text)
    return PureState(frozenset(data["locals"]), Context(data["ctx"]))


def _show_unchanged_state(st: UnchangedState) -> str:
    return json.dumps({"watched": st.watched, "ctx": _ctx_json(st.ctx)})


def _read_unchanged_state(text: str) -> UnchangedState:
    data = json.loads(text)
    return UnchangedState(data["watched"], Context(data["ctx"]))


def _show_context_state(ctx: Context) -> str:
    return json.dumps(_ctx_json(ctx))


def _read_context_state(text: str) -> Context:
    return Context(json.loads(text))


def is_pure_instance(behavior: Behavior = REFERENCE) -> StmtInductionInstance:
    """Purity soundness: a statement that is pure outside ``locals``, run in
    a context binding all the locals, either fails or leaves the context
    unchanged except on the locals (and preserves the key set)."""
    interp = functools.lru_cache(maxsize=_MEMO_SIZE)(behavior.interp)
    pure = functools.lru_cache(maxsize=_MEMO_SIZE)(behavior.is_pure)

    def prop(st: PureState, s: Stmt) -> bool:
        if not pure(s, st.locals):
            return True
        if not st.locals <= st.ctx.keys():
            return True
        out = interp(s, st.ctx)
        if isinstance(out, Failure):
            return True
        return same_ctxs(st.locals, st.ctx, out.ctx)

    def step_prop(st: PureState, s: Stmt, st1: PureState, v: int) -> bool:
        return (
            pure(s, st.locals)
            and st.locals <= st.ctx.keys()
            and interp(s, st.ctx) == Success(v, st1.ctx)
            and st1.locals == st.locals
            and same_ctxs(st.locals, st.ctx, st1.ctx)
        )

    def step_of(st: PureState, s: Stmt):
        out = interp(s, st.ctx)
        if isinstance(out, Failure):
            return None
        return PureState(st.locals, out.ctx), out.value

    def bind_enter(st1: PureState, bvar: str, v: int) -> PureState:
        return PureState(st1.locals | {bvar}, st1.ctx.assoc(bvar, v))

    return StmtInductionInstance(
        "is-pure", prop, step_prop, step_of, bind_enter,
        _show_pure_state, _read_pure_state,
    )


def unchanged_var_instance(behavior: Behavior = REFERENCE) -> StmtInductionInstance:
    """Preservation soundness: a statement that syntactically leaves the
    watched variable alone, run in a context binding it, either fails or
    yields a context with the watched value intact."""
    interp = functools.lru_cache(maxsize=_MEMO_SIZE)(behavior.interp)
    unchanged = functools.lru_cache(maxsize=_MEMO_SIZE)(unchanged_var)

    def prop(st: UnchangedState, s: Stmt) -> bool:
        if not unchanged(s, st.watched):
            return True
        if st.watched not in st.ctx:
            return True
        out = interp(s, st.ctx)
        if isinstance(out, Failure):
            return True
        return out.ctx.get(st.watched) == st.ctx[st.watched]

    def step_prop(st: UnchangedState, s: Stmt, st1: UnchangedState, v: int) -> bool:
        return (
            unchanged(s, st.watched)
            and st.watched in st.ctx
            and interp(s, st.ctx) == Success(v, st1.ctx)
            and st1.watched == st.watched
            and st1.ctx.get(st.watched) == st.ctx[st.watched]
        )

    def step_of(st: UnchangedState, s: Stmt):
        out = interp(s, st.ctx)
        if isinstance(out, Failure):
            return None
        return UnchangedState(st.watched, out.ctx), out.value

    def bind_enter(st1: UnchangedState, bvar: str, v: int) -> UnchangedState:
        return UnchangedState(st1.watched, st1.ctx.assoc(bvar, v))

    return StmtInductionInstance(
        "unchanged-var", prop, step_prop, step_of, bind_enter,
        _show_unchanged_state, _read_unchanged_state,
    )


def mul_zero_instance(behavior: Behavior = REFERENCE) -> StmtInductionInstance:
    """Refinement correctness of the multiply-by-zero pass: whenever the
    original statement succeeds, the rewritten one succeeds with the same
    value and context. (The rewrite may turn failures into successes: it
    can drop a pure operand that reads an unbound variable.)"""
    interp = functools.lru_cache(maxsize=_MEMO_SIZE)(behavior.interp)
    rewrite = functools.lru_cache(maxsize=_MEMO_SIZE)(behavior.eliminate_mul_zero)

    def prop(ctx: Context, s: Stmt) -> bool:
        out = interp(s, ctx)
        if isinstance(out, Failure):
            return True
        return interp(rewrite(s), ctx) == out

    def step_prop(ctx: Context, s: Stmt, ctx1: Context, v: int) -> bool:
        expected = Success(v, ctx1)
        return interp(s, ctx) == expected and interp(rewrite(s), ctx) == expected

    def step_of(ctx: Context, s: Stmt):
        out = interp(s, ctx)
        if isinstance(out, Failure):
            return None
        return out.ctx, out.value

    def bind_enter(ctx1: Context, bvar: str, v: int) -> Context:
        return ctx1.assoc(bvar, v)

    return StmtInductionInstance(
        "mul-zero", prop, step_prop, step_of, bind_enter,
        _show_context_state, _read_context_state,
    )


def app_assoc_instance(corpus: list[tuple], behavior: Behavior = REFERENCE) -> ListInductionInstance:
    """Associativity of append, quantified over all pairs from ``corpus``."""
    app = behavior.app_list
    pairs = tuple(itertools.product(corpus, repeat=2))

    def p_list(ls: tuple) -> bool:
        return all(app(app(ls, l1), l2) == app(ls, app(l1, l2)) for l1, l2 in pairs)

    return ListInductionInstance("list-assoc", p_list)


def is_pure_states(spec: CorpusSpec) -> list[PureState]:
    """Locals over all subsets of the spec's vars, crossed with contexts."""
    ctxs = enum_contexts(spec.vars, spec.ctx_values)
    return [PureState(sub, ctx) for sub in enum_subsets(spec.vars) for ctx in ctxs]


def unchanged_var_states(spec: CorpusSpec) -> list[UnchangedState]:
    """Watched variable over the spec's vars, crossed with contexts."""
    ctxs = enum_contexts(spec.vars, spec.ctx_values)
    return [UnchangedState(w, ctx) for w in spec.vars for ctx in ctxs]


def mul_zero_states(spec: CorpusSpec) -> list[Context]:
    """Plain contexts; refinement needs no extra state."""
    return enum_contexts(spec.vars, spec.ctx_values)
