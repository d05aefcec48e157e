"""
Report assembly and serialization.

The JSON form is canonical (sorted keys, rationals as reduced strings,
UTF-8, trailing newline) so identical inputs give byte-identical reports.
"""
import json
from typing import Any, Dict, List

import pandas as pd

from .arrangement_file import format_rational
from .lattice import element_summary
from .pipeline import AnalysisResult
from .witness import CaseBWitness

REPORT_KEYS = ("lattice", "betti", "phi", "classification", "witness",
               "homotopy_ranks", "certificates", "warnings")


def _int_table(values: Dict[int, int]) -> Dict[str, int]:
    return {str(k): v for k, v in sorted(values.items())}


def _witness_section(result: AnalysisResult) -> Any:
    witness = result.witness
    if witness is None:
        return None
    report = witness.report
    section = {
        "case": report.case.value,
        "atoms": list(report.atoms),
        "retraction_verified": report.retraction_verified,
        "loop_degrees": list(report.loop_degrees) if report.loop_degrees else None,
        "join": report.join_label,
        "checks": dict(report.checks),
        "hilbert": [{"word_length": s, "degree": d, "dimension": n}
                    for (s, d), n in sorted(report.hilbert.items())],
        "relations": len(witness.algebra.relations),
    }
    if isinstance(witness, CaseBWitness):
        section["first_nonzero_differential"] = result.algebra.label(witness.subset)
        section["m"] = witness.m
    return section


def build_report(result: AnalysisResult) -> Dict[str, Any]:
    """Plain-data report of an analysis, with the fixed top-level keys."""
    lattice = result.lattice
    classification = result.classification
    phi = result.phi
    model = result.model
    certificate = result.certificate

    kernel = {str(s): [str(e) for e in basis] for s, basis in sorted(phi.kernel_by_wordlength.items()) if basis}
    return {
        "lattice": {
            "ambient_dim": result.arrangement.ambient_dim,
            "atoms": list(result.arrangement.names),
            "description": result.arrangement.description,
            "elements": [element_summary(lattice, e) for e in range(len(lattice))],
            "geometric": bool(result.geometric),
            "top": lattice.label(lattice.top),
        },
        "betti": _int_table(result.cohomology.betti),
        "phi": {
            "injective": phi.is_injective,
            "r": phi.r,
            "kernel": kernel,
            "monomial_witness": result.algebra.monomial_label(phi.monomial_witness)
            if phi.monomial_witness is not None else None,
            "small_subsets_check": result.lemma.message,
        },
        "classification": {
            "verdict": classification.verdict.value,
            "spheres": list(classification.sphere_dimensions),
            "case": classification.case.value if classification.case else None,
            "r": classification.r,
            "description": classification.describe(),
        },
        "witness": _witness_section(result),
        "homotopy_ranks": {
            "max_degree": result.max_degree,
            "pi": _int_table(model.homotopy_ranks),
            "loop_space": _int_table(model.loop_ranks),
            "generators": [{"name": name, "degree": degree, "differential": diff}
                           for name, degree, diff in model.generators],
        },
        "certificates": {
            "exterior_iso": result.exterior_iso,
            "growth": None if certificate is None else {
                "case": certificate.case.value,
                "status": certificate.status,
                "max_degree": certificate.max_degree,
                "rows": [list(row) for row in certificate.rows],
                "message": certificate.message,
            },
        },
        "warnings": list(result.warnings),
    }


def to_json(report: Dict[str, Any]) -> str:
    """Canonical JSON text."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False, default=format_rational) + "\n"


def report_tables(report: Dict[str, Any]) -> Dict[str, pd.DataFrame]:
    """The tabular parts of a report as DataFrames (shared by text output and exports)."""
    lattice = pd.DataFrame([
        {"element": e["label"], "rank": e["rank"], "codim": e["codim"]}
        for e in report["lattice"]["elements"]
    ])
    betti = pd.DataFrame([{"degree": int(k), "betti": v} for k, v in report["betti"].items()]).sort_values("degree")
    pi = report["homotopy_ranks"]["pi"]
    homotopy = pd.DataFrame([{"degree": k, "rank": int(pi.get(str(k), 0))}
                             for k in range(2, report["homotopy_ranks"]["max_degree"] + 1)])
    growth = report["certificates"]["growth"]
    if growth is None:
        certificate = pd.DataFrame(columns=["status"])
    elif growth["case"] == "A":
        certificate = pd.DataFrame(growth["rows"], columns=["loop_degree", "free_lie_bound", "actual"])
    else:
        certificate = pd.DataFrame(growth["rows"], columns=["from", "to", "rank_sum"])
    return {"lattice": lattice, "betti": betti.reset_index(drop=True), "homotopy": homotopy, "certificate": certificate}


def to_text(report: Dict[str, Any]) -> str:
    """Human-readable summary."""
    tables = report_tables(report)
    lines: List[str] = [
        f"Arrangement: {', '.join(report['lattice']['atoms'])} in C^{report['lattice']['ambient_dim']}",
        f"Verdict: {report['classification']['description']}",
        "",
        "Intersection lattice:",
        tables["lattice"].to_string(index=False),
        "",
        "Betti numbers:",
        tables["betti"].to_string(index=False),
        "",
    ]
    phi = report["phi"]
    if phi["injective"]:
        lines.append("phi is injective")
    else:
        lines.append(f"r = {phi['r']}; kernel of phi:")
        for length, basis in phi["kernel"].items():
            lines.extend(f"  word length {length}: {element}" for element in basis)
    lines.append("")
    witness = report["witness"]
    if witness is not None:
        lines.append(f"Witness (case {witness['case']}) on {', '.join(witness['atoms'])}:")
        lines.extend(f"  {name}: {outcome}" for name, outcome in sorted(witness["checks"].items()))
        if witness["loop_degrees"]:
            lines.append(f"  free Lie loop degrees: {tuple(witness['loop_degrees'])}")
        lines.append("")
    lines.append(f"Homotopy ranks through degree {report['homotopy_ranks']['max_degree']}:")
    lines.append(tables["homotopy"].to_string(index=False))
    growth = report["certificates"]["growth"]
    if growth is not None:
        lines.extend(["", f"Growth certificate: {growth['status']} ({growth['message']})",
                      tables["certificate"].to_string(index=False)])
    for warning in report["warnings"]:
        lines.append(f"warning: {warning}")
    return "\n".join(lines) + "\n"
