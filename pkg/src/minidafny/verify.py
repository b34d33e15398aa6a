"""Batch verification driver.

Builds corpora, runs the obligation checks — chunked across worker
processes when MDFY_THREADS allows — and assembles report data. Chunks
partition the statement corpus in order and the merge is order-preserving
bookkeeping, so results are byte-identical at any parallelism level.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .gen import CorpusSpec, enum_lists, enum_stmts, random_stmts
from .induction import (
    MAX_FAILURES,
    ObligationReport,
    check_assembled,
    check_list_obligations,
    check_stmt_obligations,
    merge_reports,
)
from .instances import (
    app_assoc_instance,
    is_pure_instance,
    is_pure_states,
    mul_zero_instance,
    mul_zero_states,
    unchanged_var_instance,
    unchanged_var_states,
)
from .mutants import apply_mutant

LIST_ELEMS = (1, 2)
DEFAULT_LIST_MAX_LEN = 4
RANDOM_CORPUS_COUNT = 1000

# Below this many statements the process-pool overhead is not worth it.
PARALLEL_THRESHOLD = 20_000


class UnknownInstanceError(ValueError):
    pass


_STMT_INSTANCES = {
    "is-pure": (is_pure_instance, is_pure_states),
    "unchanged-var": (unchanged_var_instance, unchanged_var_states),
    "mul-zero": (mul_zero_instance, mul_zero_states),
}

INSTANCE_NAMES = (*sorted(_STMT_INSTANCES), "list-assoc")


@dataclass(frozen=True)
class VerifyRequest:
    """A verification run, fully described by picklable data so worker
    processes can rebuild it."""

    instance: str
    spec: CorpusSpec
    mutant: "str | None" = None
    random_corpus: bool = False
    max_failures: "int | None" = MAX_FAILURES
    threads: "int | None" = None


@dataclass
class VerifyResult:
    instance: str
    corpus_desc: dict
    obligations: list[ObligationReport]
    assembled: ObligationReport

    @property
    def ok(self) -> bool:
        return all(r.failure_count == 0 for r in (*self.obligations, self.assembled))


def resolve_threads(explicit: "int | None" = None) -> int:
    """Worker count: explicit argument, else MDFY_THREADS, else one worker
    per CPU (capped at 8). 0 or unset means the default."""
    if explicit is not None and explicit > 0:
        return explicit
    env = os.environ.get("MDFY_THREADS", "")
    if env.strip():
        n = int(env)
        if n > 0:
            return n
    return min(8, os.cpu_count() or 1)


def build_stmt_corpus(req: VerifyRequest) -> list:
    if req.random_corpus:
        return random_stmts(req.spec, RANDOM_CORPUS_COUNT)
    return enum_stmts(req.spec)


def build_stmt_checker(req: VerifyRequest):
    factory, states_of = _STMT_INSTANCES[req.instance]
    behavior = apply_mutant(req.mutant)
    return factory(behavior), states_of(req.spec)


# Worker-process state: rebuilt from the request on first use, or inherited
# from the parent wholesale when the start method is fork.
_WORK: "tuple[VerifyRequest, object, list, list] | None" = None


def _init_worker(req: VerifyRequest) -> None:
    global _WORK
    if _WORK is not None and _WORK[0] == req:
        return
    inst, states = build_stmt_checker(req)
    stmts = build_stmt_corpus(req)
    _WORK = (req, inst, states, stmts)


def _run_chunk(bounds: tuple[int, int]):
    req, inst, states, stmts = _WORK
    lo, hi = bounds
    part = stmts[lo:hi]
    obligations = check_stmt_obligations(inst, states, part, max_failures=req.max_failures)
    assembled = check_assembled(inst, states, part, max_failures=req.max_failures)
    return obligations, assembled


def run_verification(req: VerifyRequest) -> VerifyResult:
    """Run one verification request end to end."""
    if req.instance == "list-assoc":
        return _run_list_verification(req)
    if req.instance not in _STMT_INSTANCES:
        valid = ", ".join(INSTANCE_NAMES)
        raise UnknownInstanceError(f"unknown instance {req.instance!r}; valid names: {valid}")

    corpus_desc = {
        "depth": req.spec.max_depth,
        "vars": list(req.spec.vars),
        "consts": list(req.spec.consts),
        "ctxValues": list(req.spec.ctx_values),
    }
    threads = resolve_threads(req.threads)
    inst, states = build_stmt_checker(req)
    stmts = build_stmt_corpus(req)

    if threads > 1 and len(stmts) >= PARALLEL_THRESHOLD:
        global _WORK
        _WORK = (req, inst, states, stmts)  # inherited by forked workers
        chunk = max(1000, -(-len(stmts) // (threads * 8)))
        bounds = [(lo, min(lo + chunk, len(stmts))) for lo in range(0, len(stmts), chunk)]
        with ProcessPoolExecutor(
            max_workers=threads, initializer=_init_worker, initargs=(req,)
        ) as pool:
            parts = list(pool.map(_run_chunk, bounds))
        _WORK = None
        obligations = merge_reports([p[0] for p in parts], max_failures=req.max_failures)
        assembled = merge_reports([[p[1]] for p in parts], max_failures=req.max_failures)[0]
    else:
        obligations = check_stmt_obligations(inst, states, stmts, max_failures=req.max_failures)
        assembled = check_assembled(inst, states, stmts, max_failures=req.max_failures)

    return VerifyResult(req.instance, corpus_desc, obligations, assembled)


def _run_list_verification(req: VerifyRequest) -> VerifyResult:
    # For the list instance, depth means maximum list length.
    max_len = req.spec.max_depth
    behavior = apply_mutant(req.mutant)
    corpus = enum_lists(LIST_ELEMS, max_len)
    inst = app_assoc_instance(corpus, behavior)
    nil, cons, induct = check_list_obligations(
        inst, LIST_ELEMS, max_len, max_failures=req.max_failures
    )
    corpus_desc = {
        "depth": max_len,
        "vars": [],
        "consts": list(LIST_ELEMS),
        "ctxValues": [],
    }
    return VerifyResult(req.instance, corpus_desc, [nil, cons], induct)
