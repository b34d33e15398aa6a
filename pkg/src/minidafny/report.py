"""Report rendering: JSON document, text table, and a summary figure."""

from __future__ import annotations

import json

from .induction import ObligationReport
from .verify import VerifyResult

# Shown per obligation in the text rendering; the JSON keeps every
# retained counterexample.
TEXT_COUNTEREXAMPLE_LIMIT = 3


def _obligation_data(rep: ObligationReport) -> dict:
    return {
        "name": rep.name,
        "checked": rep.checked,
        "vacuous": rep.vacuous,
        "failures": [
            {
                "stmt": cex.stmt,
                "state": cex.state,
                "subResults": cex.sub_results,
                "note": cex.note,
            }
            for cex in rep.failures
        ],
    }


def result_data(result: VerifyResult) -> dict:
    """The report as a JSON-ready document."""
    return {
        "instance": result.instance,
        "corpus": result.corpus_desc,
        "obligations": [_obligation_data(r) for r in result.obligations],
        "assembled": _obligation_data(result.assembled),
        "ok": result.ok,
    }


def render_json(result: VerifyResult) -> str:
    return json.dumps(result_data(result), indent=2) + "\n"


def render_text(result: VerifyResult) -> str:
    desc = result.corpus_desc
    lines = [
        f"instance: {result.instance}",
        "corpus: depth={} vars={} consts={} ctxValues={}".format(
            desc["depth"],
            ",".join(desc["vars"]) or "-",
            ",".join(str(c) for c in desc["consts"]) or "-",
            ",".join(str(v) for v in desc["ctxValues"]) or "-",
        ),
    ]
    for rep in (*result.obligations, result.assembled):
        lines.append(
            f"{rep.name} checked={rep.checked} "
            f"vacuous={'true' if rep.vacuous else 'false'} failures={rep.failure_count}"
        )
        for cex in rep.failures[:TEXT_COUNTEREXAMPLE_LIMIT]:
            lines.append(f"  stmt: {cex.stmt}")
            lines.append(f"  state: {cex.state}")
            if cex.sub_results:
                lines.append(f"  subResults: {cex.sub_results}")
            lines.append(f"  note: {cex.note}")
    lines.append(f"ok: {'true' if result.ok else 'false'}")
    return "\n".join(lines) + "\n"


def write_report_figure(result: VerifyResult, path: str) -> None:
    """Render a per-obligation coverage/failure bar chart to ``path``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    reports = [*result.obligations, result.assembled]
    names = [r.name for r in reports]
    checked = [r.checked for r in reports]
    failed = [r.failure_count for r in reports]
    pos = range(len(reports))

    fig, ax = plt.subplots(figsize=(8, 0.45 * len(reports) + 1.6))
    ax.barh(pos, checked, color="#4878a8", label="checked")
    ax.barh(pos, failed, color="#c0392b", label="failures")
    ax.set_yticks(list(pos))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    if max(checked, default=0) > 0:
        ax.set_xscale("symlog")
    ax.set_xlabel("instances (symlog)")
    status = "ok" if result.ok else "FAILING"
    ax.set_title(f"{result.instance}: obligation coverage ({status})")
    for i, rep in enumerate(reports):
        if rep.vacuous:
            ax.text(0, i, " vacuous", va="center", fontsize=8, color="#806000")
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
