"""Case-decomposed structural induction checking.

Instead of testing a property ``prop(state, stmt)`` monolithically, each
inductive case — one per constructor, with separate success and failure
control paths — is checked as an isolated, named obligation over a finite
corpus. When the property breaks, the failing obligation names the
constructor and path responsible, and because corpora are enumerated
smallest-first, the first recorded counterexample is minimal.

Premises quantified over execution results are instantiated at the
``step_of`` witness, so every reported counterexample is a genuine
violation of the universally quantified case.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .ast import Assign, Bind, BinOp, Const, Seq, Stmt, Var, seq_of
from .gen import enum_lists
from .syntax import parse, pretty_print

#: Retained counterexamples per obligation; failure *counts* stay exact.
MAX_FAILURES = 25

OBLIGATION_NAMES = (
    "ConstCase",
    "VarCase",
    "StepSound",
    "BinOpStep",
    "BinOpFailLeft",
    "BinOpFailRight",
    "AssignStep",
    "AssignFail",
    "BindStep",
    "BindFail",
    "SeqNil",
    "SeqConsStep",
    "SeqConsFail",
)

LIST_OBLIGATION_NAMES = ("NilCase", "ConsCase")

ASSEMBLED_NAME = "Induct"


@dataclass(frozen=True)
class StmtInductionInstance:
    """A property bundle the statement harness checks case by case.

    ``prop(state, stmt)`` is the target property. ``step_prop(state, stmt,
    state1, value)`` is its success-path variant: it must unconditionally
    assert that executing ``stmt`` from ``state`` succeeds with result
    state ``state1`` and value ``value``. ``step_of`` runs one execution,
    returning None on failure; ``bind_enter`` maps a state across entry
    into a Bind body. All four must be pure, and ``show_state`` /
    ``read_state`` must round-trip states through text.
    """

    name: str
    prop: Callable[[Any, Stmt], bool]
    step_prop: Callable[[Any, Stmt, Any, Any], bool]
    step_of: Callable[[Any, Stmt], "tuple[Any, Any] | None"]
    bind_enter: Callable[[Any, str, Any], Any]
    show_state: Callable[[Any], str] = str
    read_state: "Callable[[str], Any] | None" = None


@dataclass(frozen=True)
class ListInductionInstance:
    """A property of integer lists, checked by list induction."""

    name: str
    p_list: Callable[[tuple], bool]


@dataclass
class Counterexample:
    """One genuine violation: premise held, conclusion failed.

    ``stmt`` re-parses to the failing statement (a JSON list for list
    obligations); ``state`` re-reads through the instance's
    ``read_state``; ``sub_results`` shows the premise bindings.
    """

    stmt: str
    state: str
    sub_results: str
    note: str


@dataclass
class ObligationReport:
    """Tally for one obligation over a corpus.

    ``checked`` counts pairs where the premise held, ``skipped`` those
    where it did not; ``failure_count`` is exact even when the retained
    ``failures`` list was capped.
    """

    name: str
    checked: int = 0
    skipped: int = 0
    failure_count: int = 0
    failures: list[Counterexample] = field(default_factory=list)

    @property
    def vacuous(self) -> bool:
        return self.checked == 0


def obligation_names_for(s: Stmt) -> tuple[str, ...]:
    """The obligations applicable to a statement's head constructor."""
    match s:
        case Const(_):
            return ("ConstCase", "StepSound")
        case Var(_):
            return ("VarCase", "StepSound")
        case BinOp(_, _, _):
            return ("StepSound", "BinOpStep", "BinOpFailLeft", "BinOpFailRight")
        case Assign(_, _):
            return ("StepSound", "AssignStep", "AssignFail")
        case Bind(_, _, _):
            return ("StepSound", "BindStep", "BindFail")
        case Seq(()):
            return ("SeqNil", "StepSound")
        case Seq(_):
            return ("StepSound", "SeqConsStep", "SeqConsFail")
    raise TypeError(f"not a Stmt: {s!r}")


# Each evaluator returns (premise, conclusion, details): conclusion is None
# when the premise does not hold, and details is nonempty only on failure.


def _eval_leaf(inst, st, s):
    return True, inst.prop(st, s), ""


def _eval_step_sound(inst, st, s):
    step = inst.step_of(st, s)
    if step is None:
        return False, None, ""
    st1, v = step
    if not inst.step_prop(st, s, st1, v):
        return False, None, ""
    concl = inst.prop(st, s)
    sub = "" if concl else f"step -> state={inst.show_state(st1)} value={v}, stepProp=true"
    return True, concl, sub


def _eval_binop_step(inst, st, s):
    left = inst.step_of(st, s.lhs)
    if left is None:
        return False, None, ""
    st1, v1 = left
    if not inst.step_prop(st, s.lhs, st1, v1):
        return False, None, ""
    right = inst.step_of(st1, s.rhs)
    if right is None:
        return False, None, ""
    st2, v2 = right
    if not inst.step_prop(st1, s.rhs, st2, v2):
        return False, None, ""
    concl = inst.prop(st, s)
    sub = "" if concl else (
        f"lhs step -> state={inst.show_state(st1)} value={v1}, stepProp=true; "
        f"rhs step -> state={inst.show_state(st2)} value={v2}, stepProp=true"
    )
    return True, concl, sub


def _eval_binop_fail_left(inst, st, s):
    if inst.step_of(st, s.lhs) is not None or not inst.prop(st, s.lhs):
        return False, None, ""
    concl = inst.prop(st, s)
    return True, concl, "" if concl else "lhs step fails, prop(st, lhs)=true"


def _eval_binop_fail_right(inst, st, s):
    left = inst.step_of(st, s.lhs)
    if left is None:
        return False, None, ""
    st1, v1 = left
    if not inst.step_prop(st, s.lhs, st1, v1):
        return False, None, ""
    if inst.step_of(st1, s.rhs) is not None or not inst.prop(st1, s.rhs):
        return False, None, ""
    concl = inst.prop(st, s)
    sub = "" if concl else (
        f"lhs step -> state={inst.show_state(st1)} value={v1}, stepProp=true; "
        f"rhs step fails, prop(st1, rhs)=true"
    )
    return True, concl, sub


def _eval_assign_step(inst, st, s):
    step = inst.step_of(st, s.aval)
    if step is None:
        return False, None, ""
    st1, v = step
    if not inst.step_prop(st, s.aval, st1, v):
        return False, None, ""
    concl = inst.prop(st, s)
    sub = "" if concl else f"aval step -> state={inst.show_state(st1)} value={v}, stepProp=true"
    return True, concl, sub


def _eval_assign_fail(inst, st, s):
    if inst.step_of(st, s.aval) is not None or not inst.prop(st, s.aval):
        return False, None, ""
    concl = inst.prop(st, s)
    return True, concl, "" if concl else "aval step fails, prop(st, aval)=true"


def _eval_bind_step(inst, st, s):
    step = inst.step_of(st, s.bval)
    if step is None:
        return False, None, ""
    st1, v = step
    if not inst.step_prop(st, s.bval, st1, v):
        return False, None, ""
    entered = inst.bind_enter(st1, s.bvar, v)
    if not inst.prop(entered, s.body):
        return False, None, ""
    concl = inst.prop(st, s)
    sub = "" if concl else (
        f"bval step -> state={inst.show_state(st1)} value={v}, stepProp=true; "
        f"prop(enter(st1, {s.bvar}, {v})={inst.show_state(entered)}, body)=true"
    )
    return True, concl, sub


def _eval_bind_fail(inst, st, s):
    if inst.step_of(st, s.bval) is not None or not inst.prop(st, s.bval):
        return False, None, ""
    concl = inst.prop(st, s)
    return True, concl, "" if concl else "bval step fails, prop(st, bval)=true"


def _eval_seq_cons_step(inst, st, s):
    head = s.stmts[0]
    tail = seq_of(s.stmts[1:])
    step = inst.step_of(st, head)
    if step is None:
        return False, None, ""
    st1, v1 = step
    if not inst.step_prop(st, head, st1, v1):
        return False, None, ""
    if not inst.prop(st1, tail):
        return False, None, ""
    concl = inst.prop(st, s)
    sub = "" if concl else (
        f"head step -> state={inst.show_state(st1)} value={v1}, stepProp=true; "
        f"prop(st1, tail=`{pretty_print(tail)}`)=true"
    )
    return True, concl, sub


def _eval_seq_cons_fail(inst, st, s):
    head = s.stmts[0]
    if inst.step_of(st, head) is not None or not inst.prop(st, head):
        return False, None, ""
    concl = inst.prop(st, s)
    return True, concl, "" if concl else "head step fails, prop(st, head)=true"


_EVALUATORS = {
    "ConstCase": _eval_leaf,
    "VarCase": _eval_leaf,
    "StepSound": _eval_step_sound,
    "BinOpStep": _eval_binop_step,
    "BinOpFailLeft": _eval_binop_fail_left,
    "BinOpFailRight": _eval_binop_fail_right,
    "AssignStep": _eval_assign_step,
    "AssignFail": _eval_assign_fail,
    "BindStep": _eval_bind_step,
    "BindFail": _eval_bind_fail,
    "SeqNil": _eval_leaf,
    "SeqConsStep": _eval_seq_cons_step,
    "SeqConsFail": _eval_seq_cons_fail,
    ASSEMBLED_NAME: _eval_leaf,
}


def evaluate_obligation(inst: StmtInductionInstance, name: str, state, stmt: Stmt):
    """Premise and conclusion of one obligation at one (state, stmt).

    Returns ``(premise, conclusion, details)``; conclusion is None when
    the premise does not hold.
    """
    return _EVALUATORS[name](inst, state, stmt)


def _record(rep: ObligationReport, inst, st, s_text, sub, max_failures):
    rep.failure_count += 1
    if max_failures is None or len(rep.failures) < max_failures:
        rep.failures.append(
            Counterexample(
                stmt=s_text,
                state=inst.show_state(st),
                sub_results=sub,
                note=f"{rep.name}: premise holds but the target property fails",
            )
        )


def check_stmt_obligations(
    inst: StmtInductionInstance,
    states: Sequence,
    stmts: Iterable[Stmt],
    *,
    max_failures: "int | None" = MAX_FAILURES,
) -> list[ObligationReport]:
    """Check every applicable obligation for every (state, stmt) pair.

    Returns the 13 reports in the fixed OBLIGATION_NAMES order; the input
    iteration order (statements outer, states inner) fixes counterexample
    order.
    """
    reports = {name: ObligationReport(name) for name in OBLIGATION_NAMES}
    for s in stmts:
        names = obligation_names_for(s)
        text = None
        for st in states:
            for name in names:
                premise, conclusion, sub = _EVALUATORS[name](inst, st, s)
                rep = reports[name]
                if not premise:
                    rep.skipped += 1
                    continue
                rep.checked += 1
                if not conclusion:
                    if text is None:
                        text = pretty_print(s)
                    _record(rep, inst, st, text, sub, max_failures)
    return [reports[name] for name in OBLIGATION_NAMES]


def check_assembled(
    inst: StmtInductionInstance,
    states: Sequence,
    stmts: Iterable[Stmt],
    *,
    max_failures: "int | None" = MAX_FAILURES,
) -> ObligationReport:
    """The assembled theorem, checked directly: prop on every pair."""
    rep = ObligationReport(ASSEMBLED_NAME)
    for s in stmts:
        text = None
        for st in states:
            rep.checked += 1
            if not inst.prop(st, s):
                if text is None:
                    text = pretty_print(s)
                _record(rep, inst, st, text, "", max_failures)
    return rep


def merge_reports(
    parts: Sequence[Sequence[ObligationReport]],
    *,
    max_failures: "int | None" = MAX_FAILURES,
) -> list[ObligationReport]:
    """Merge per-chunk reports, chunks given in corpus order.

    The merge is associative bookkeeping, so results are identical to a
    single-pass run regardless of how the corpus was split.
    """
    merged = []
    for group in zip(*parts):
        total = ObligationReport(group[0].name)
        for rep in group:
            total.checked += rep.checked
            total.skipped += rep.skipped
            total.failure_count += rep.failure_count
            for cex in rep.failures:
                if max_failures is None or len(total.failures) < max_failures:
                    total.failures.append(cex)
        merged.append(total)
    return merged


def check_list_obligations(
    inst: ListInductionInstance,
    elems: tuple,
    max_len: int,
    *,
    max_failures: "int | None" = MAX_FAILURES,
) -> list[ObligationReport]:
    """NilCase, ConsCase, and the assembled Induct report for a list property.

    ConsCase checks ``p_list(t) => p_list((h,) + t)`` for every element h
    and every list t shorter than ``max_len``; Induct checks ``p_list``
    directly on every list up to ``max_len``.
    """
    corpus = enum_lists(elems, max_len)

    nil = ObligationReport("NilCase")
    nil.checked += 1
    if not inst.p_list(()):
        _list_record(nil, (), "", "", max_failures)

    cons = ObligationReport("ConsCase")
    for t in corpus:
        if len(t) >= max_len:
            continue
        for h in elems:
            if not inst.p_list(t):
                cons.skipped += 1
                continue
            cons.checked += 1
            ls = (h,) + t
            if not inst.p_list(ls):
                _list_record(
                    cons,
                    ls,
                    json.dumps({"h": h, "t": list(t)}),
                    f"pList({list(t)})=true",
                    max_failures,
                )

    induct = ObligationReport(ASSEMBLED_NAME)
    for ls in corpus:
        induct.checked += 1
        if not inst.p_list(ls):
            _list_record(induct, ls, "", "", max_failures)

    return [nil, cons, induct]


def _list_record(rep, ls, state, sub, max_failures):
    rep.failure_count += 1
    if max_failures is None or len(rep.failures) < max_failures:
        rep.failures.append(
            Counterexample(
                stmt=json.dumps(list(ls)),
                state=state,
                sub_results=sub,
                note=f"{rep.name}: premise holds but the list property fails",
            )
        )


def revalidate_stmt_counterexample(
    inst: StmtInductionInstance, obligation: str, cex: Counterexample
) -> bool:
    """Re-run one reported violation from its textual form.

    True when the premise still holds and the conclusion still fails —
    i.e. the report describes a genuine counterexample.
    """
    if inst.read_state is None:
        raise ValueError(f"instance {inst.name} cannot re-read states")
    stmt = parse(cex.stmt)
    state = inst.read_state(cex.state)
    premise, conclusion, _ = evaluate_obligation(inst, obligation, state, stmt)
    return bool(premise) and conclusion is False


def revalidate_list_counterexample(
    inst: ListInductionInstance, obligation: str, cex: Counterexample
) -> bool:
    """List-side analog of :func:`revalidate_stmt_counterexample`."""
    if obligation == "ConsCase":
        data = json.loads(cex.state)
        t = tuple(data["t"])
        h = data["h"]
        return inst.p_list(t) and not inst.p_list((h,) + t)
    ls = tuple(json.loads(cex.stmt))
    return not inst.p_list(ls)
