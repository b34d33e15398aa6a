"""Deterministic corpus construction.

Bounded-exhaustive enumeration of statements (smallest depth first, fixed
constructor order, so the first counterexample found over a corpus is
minimal by construction), plus contexts, small lists, and a seeded random
statement generator.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .ast import Assign, Bind, BinOp, Const, Op, Seq, Stmt, Var

# Enumerated sequences are capped at three elements to bound corpus size;
# random generation goes up to five.
SEQ_ARITY_CAP = 3
RANDOM_SEQ_ARITY_CAP = 5

STANDARD_BUDGET = 200_000


@dataclass(frozen=True)
class CorpusSpec:
    """Everything a corpus is generated from; equal specs give equal corpora."""

    max_depth: int
    vars: tuple[str, ...] = ("x", "y")
    consts: tuple[int, ...] = (0, 1, 3)
    ctx_values: tuple[int, ...] = (0, 1)
    seed: int = 0
    budget: int | None = None


def standard_spec(max_depth: int = 3) -> CorpusSpec:
    """The default corpus: vars {x, y}, consts {0, 1, 3}, context values
    {0, 1}, capped at 200,000 statements."""
    return CorpusSpec(max_depth=max_depth, budget=STANDARD_BUDGET)


def iter_stmts(spec: CorpusSpec) -> Iterator[Stmt]:
    """All normal-form statements of depth <= max_depth over the spec's
    atoms, smallest depth first; deterministic order within a depth
    (Const, Var, BinOp Add, BinOp Mul, Assign, Bind, Seq by length).
    The budget, if set, is applied by the caller (see enum_stmts)."""
    level0 = [Const(c) for c in spec.consts] + [Var(v) for v in spec.vars]
    yield from level0
    levels = [level0]
    for d in range(1, spec.max_depth + 1):
        pool = [(s, lv) for lv, level in enumerate(levels) for s in level]
        want = d - 1
        block: list[Stmt] = []

        def keep(s: Stmt) -> Stmt:
            block.append(s)
            return s

        for op in (Op.ADD, Op.MUL):
            for lhs, dl in pool:
                for rhs, dr in pool:
                    if max(dl, dr) == want:
                        yield keep(BinOp(op, lhs, rhs))
        for v in spec.vars:
            for aval, da in pool:
                if da == want:
                    yield keep(Assign(v, aval))
        for v in spec.vars:
            for bval, db in pool:
                for body, dbody in pool:
                    if max(db, dbody) == want:
                        yield keep(Bind(v, bval, body))
        if d == 1:
            yield keep(Seq(()))
        for length in range(2, SEQ_ARITY_CAP + 1):
            for combo in itertools.product(pool, repeat=length):
                if max(dep for _, dep in combo) == want:
                    yield keep(Seq(tuple(s for s, _ in combo)))
        levels.append(block)


def enum_stmts(spec: CorpusSpec) -> list[Stmt]:
    """Materialized enumeration, truncated at the spec's budget if set."""
    it = iter_stmts(spec)
    if spec.budget is not None:
        it = itertools.islice(it, spec.budget)
    return list(it)


def enum_contexts(vars: tuple[str, ...], values: tuple[int, ...]) -> list:
    """All contexts whose key set is any subset of ``vars`` and whose
    values come from ``values``; subsets by increasing size then
    lexicographic, assignments in value order."""
    from .interp import Context

    out = []
    for k in range(len(vars) + 1):
        for subset in itertools.combinations(vars, k):
            for vals in itertools.product(values, repeat=k):
                out.append(Context(zip(subset, vals)))
    return out


def enum_subsets(vars: tuple[str, ...]) -> list[frozenset[str]]:
    """All subsets of ``vars``, by increasing size then lexicographic."""
    return [
        frozenset(subset)
        for k in range(len(vars) + 1)
        for subset in itertools.combinations(vars, k)
    ]


def enum_lists(elems: tuple, max_len: int) -> list[tuple]:
    """All tuples over ``elems`` of length <= max_len, shortest first."""
    return [
        combo
        for length in range(max_len + 1)
        for combo in itertools.product(elems, repeat=length)
    ]


def random_stmts(spec: CorpusSpec, count: int) -> list[Stmt]:
    """``count`` random normal-form statements of depth <= max_depth.

    The stream is a pure function of (spec, seed): identical inputs give
    identical statement sequences.
    """
    if count < 1:
        raise ValueError("count must be positive")
    rng = random.Random(spec.seed)
    return [_random_stmt(rng, spec, spec.max_depth) for _ in range(count)]


_INNER_KINDS = ("const", "var", "add", "mul", "assign", "bind", "seq")
_LEAF_KINDS = ("const", "var")
_SEQ_LENGTHS = (0, 2, 3, 4, 5)


def _random_stmt(rng: random.Random, spec: CorpusSpec, fuel: int) -> Stmt:
    kind = rng.choice(_INNER_KINDS if fuel > 0 else _LEAF_KINDS)
    if kind == "const":
        return Const(rng.choice(spec.consts))
    if kind == "var":
        return Var(rng.choice(spec.vars))
    if kind == "add":
        return BinOp(Op.ADD, _random_stmt(rng, spec, fuel - 1), _random_stmt(rng, spec, fuel - 1))
    if kind == "mul":
        return BinOp(Op.MUL, _random_stmt(rng, spec, fuel - 1), _random_stmt(rng, spec, fuel - 1))
    if kind == "assign":
        return Assign(rng.choice(spec.vars), _random_stmt(rng, spec, fuel - 1))
    if kind == "bind":
        return Bind(
            rng.choice(spec.vars),
            _random_stmt(rng, spec, fuel - 1),
            _random_stmt(rng, spec, fuel - 1),
        )
    length = rng.choice(_SEQ_LENGTHS)
    return Seq(tuple(_random_stmt(rng, spec, fuel - 1) for _ in range(length)))
