"""Report assembly and serialization.

The structured format is JSON with a fixed key order and every integer
rendered as a decimal string, so results are exact at any size and a run
with a fixed seed is byte-identical.
"""

import json


def _s(v):
    """Integers (including booleans kept as booleans) to decimal strings."""
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    return v


def empty_report():
    return {
        "dimension": None,
        "depth": None,
        "multiplicity": None,
        "hilbert_coefficients": [],
        "hdeg": None,
        "torsions": [],
        "chi1": None,
        "h0_length": None,
        "flags": {},
        "thm1": {},
        "thm2": {},
        "witnesses": [],
    }


def fill_invariants(report, inv):
    """Populate the numeric section from an InvariantReport."""
    report["dimension"] = _s(inv.dim)
    report["depth"] = _s(inv.depth)
    report["multiplicity"] = _s(inv.e[0])
    report["hilbert_coefficients"] = [_s(c) for c in inv.e.e]
    report["hdeg"] = _s(inv.hdeg)
    report["torsions"] = [_s(t) for t in inv.torsions]
    report["chi1"] = _s(inv.chi1)
    report["h0_length"] = _s(inv.h0_length)
    report["flags"] = {
        "generalized_cm": inv.generalized_cm,
        "unmixed": inv.unmixed,
        "cohen_macaulay": inv.cohen_macaulay,
    }
    return report


def _consequences(c):
    out = {}
    for k in sorted(c):
        v = c[k]
        if isinstance(v, list):
            out[k] = list(v)
        else:
            out[k] = _s(v)
    return out


def fill_thm1(report, verdict):
    report["thm1"] = {
        "condition1": verdict.condition1,
        "condition2a": list(verdict.condition2a),
        "condition2b": verdict.condition2b,
        "equivalence_consistent": verdict.equivalence_consistent,
        "consequences": _consequences(verdict.consequences),
    }
    report["witnesses"].extend(verdict.witnesses)
    return report


def fill_thm2(report, verdict):
    report["thm2"] = {
        "condition1": verdict.condition1,
        "condition2": verdict.condition2,
        "unmixed": verdict.unmixed,
        "equivalence_consistent": verdict.equivalence_consistent,
        "consequences": _consequences(verdict.consequences),
    }
    report["witnesses"].extend(verdict.witnesses)
    return report


def fill_audit(report, audit):
    report["chi1"] = _s(audit["chi1"])
    report["hdeg"] = _s(audit["hdeg"])
    report["hilbert_coefficients"] = [_s(c) for c in audit["e"]]
    report["torsions"] = [_s(t) for t in audit["torsions"]]
    return report


def to_json(report):
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def to_text(report):
    lines = []

    def row(label, value):
        if value is None or value == [] or value == {}:
            return
        lines.append(f"{label:<22}{value}")

    row("dimension", report["dimension"])
    row("depth", report["depth"])
    row("multiplicity", report["multiplicity"])
    row("hilbert coefficients", " ".join(map(str, report["hilbert_coefficients"])))
    row("hdeg", report["hdeg"])
    row("torsions", " ".join(map(str, report["torsions"])))
    row("chi1", report["chi1"])
    row("h0 length", report["h0_length"])
    if report["flags"]:
        flags = ", ".join(k for k, v in report["flags"].items() if v) or "(none)"
        row("flags", flags)
    for key in ("thm1", "thm2"):
        sec = report[key]
        if not sec:
            continue
        parts = ", ".join(
            f"{k}={v}" for k, v in sec.items() if k != "consequences"
        )
        row(key, parts)
        if sec.get("consequences"):
            row(f"{key} consequences", ", ".join(
                f"{k}={v}" for k, v in sec["consequences"].items()
            ))
    for w in report["witnesses"]:
        lines.append(f"witness: {w}")
    return "\n".join(lines) + "\n"
