"""Deterministic serialization of verification outcomes.

JSON documents are rendered with sorted keys and a fixed indent so that two
runs over the same inputs produce byte-identical files. Wall-clock timings
are therefore left out unless explicitly requested, in which case they sit
in a dedicated elapsed_ms field that consumers can strip.
"""

from __future__ import annotations

import csv
import io
import json

from .numtheory import Modulus
from .verify import Lemma5Diagnostics, VerificationReport

__all__ = [
    "SCHEMA_VERSION",
    "verification_document",
    "lemma5_document",
    "ideal_document",
    "sweep_document",
    "render_json",
    "sweep_csv",
    "correlation_csv",
    "VERIFICATION_SCHEMA",
    "LEMMA5_SCHEMA",
    "IDEAL_SCHEMA",
    "SWEEP_SCHEMA",
]

SCHEMA_VERSION = 1


def _report_fields(report: VerificationReport, include_timing: bool) -> dict:
    doc = {
        "q": report.q,
        "p": report.p,
        "e": report.e,
        "period": report.period,
        "roots_count": report.roots_count,
        "pairs_checked": report.pairs_checked,
        "sequences_compared": report.sequences_compared,
        "counterexamples": [w.to_dict() for w in report.counterexamples],
        "status": report.status,
    }
    if include_timing:
        doc["elapsed_ms"] = report.elapsed_ms
    return doc


def verification_document(
    report: VerificationReport, include_timing: bool = False
) -> dict:
    return {"schema_version": SCHEMA_VERSION, **_report_fields(report, include_timing)}


def lemma5_document(diag: Lemma5Diagnostics) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "p": diag.p,
        "e": diag.e,
        "q": diag.p**diag.e,
        "root_pairs": [rp.to_dict() for rp in diag.root_pairs],
        "configs_checked": diag.configs_checked,
        "violating_pairs": [w.to_dict() for w in diag.violating_pairs],
        "status": "refuted" if diag.violating_pairs else "verified",
    }


def ideal_document(mod: Modulus, all_zero: bool) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "q": mod.q,
        "p": mod.p,
        "e": mod.e,
        "period": mod.phi,
        "all_zero": all_zero,
        "status": "verified" if all_zero else "refuted",
    }


def sweep_document(
    reports: list[VerificationReport],
    max_q: int,
    e_filter: int | None = None,
    include_timing: bool = False,
) -> dict:
    statuses = [r.status for r in reports]
    return {
        "schema_version": SCHEMA_VERSION,
        "max_q": max_q,
        "e_filter": e_filter,
        "summary": {
            "moduli": len(reports),
            "verified": statuses.count("verified"),
            "refuted": statuses.count("refuted"),
            "errors": statuses.count("error"),
            "refuted_q": [r.q for r in reports if r.status == "refuted"],
        },
        "reports": [_report_fields(r, include_timing) for r in reports],
    }


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def sweep_csv(reports: list[VerificationReport]) -> str:
    """One row per modulus; counterexamples packed as c:d:tau;c:d:tau."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        [
            "q",
            "p",
            "e",
            "period",
            "roots_count",
            "pairs_checked",
            "sequences_compared",
            "status",
            "counterexamples",
        ]
    )
    for r in reports:
        packed = ";".join(f"{w.c}:{w.d}:{w.tau}" for w in r.counterexamples)
        writer.writerow(
            [
                r.q,
                r.p,
                r.e,
                r.period,
                r.roots_count,
                r.pairs_checked,
                r.sequences_compared,
                r.status,
                packed,
            ]
        )
    return buf.getvalue()


def correlation_csv(taus: list[int], values: list[int]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["tau", "value"])
    for tau, value in zip(taus, values):
        writer.writerow([tau, value])
    return buf.getvalue()


_WITNESS_DECIMATION = {
    "type": "object",
    "properties": {
        "c": {"type": "integer"},
        "d": {"type": "integer"},
        "tau": {"type": "integer"},
    },
    "required": ["c", "d", "tau"],
    "additionalProperties": False,
}

_WITNESS_ROOT = {
    "type": "object",
    "properties": {
        "xi": {"type": "integer"},
        "zeta": {"type": "integer"},
        "a": {"type": "integer"},
        "b": {"type": "integer"},
    },
    "required": ["xi", "zeta", "a", "b"],
    "additionalProperties": False,
}

_REPORT_FIELDS_SCHEMA = {
    "q": {"type": "integer"},
    "p": {"type": "integer"},
    "e": {"type": "integer"},
    "period": {"type": "integer"},
    "roots_count": {"type": "integer"},
    "pairs_checked": {"type": "integer"},
    "sequences_compared": {"type": "integer"},
    "counterexamples": {
        "type": "array",
        "items": {"anyOf": [_WITNESS_DECIMATION, _WITNESS_ROOT]},
    },
    "status": {"enum": ["verified", "refuted", "error"]},
    "elapsed_ms": {"type": "number"},
}

_REPORT_REQUIRED = [
    "q",
    "p",
    "e",
    "period",
    "roots_count",
    "pairs_checked",
    "sequences_compared",
    "counterexamples",
    "status",
]

VERIFICATION_SCHEMA = {
    "type": "object",
    "properties": {"schema_version": {"const": 1}, **_REPORT_FIELDS_SCHEMA},
    "required": ["schema_version", *_REPORT_REQUIRED],
    "additionalProperties": False,
}

LEMMA5_SCHEMA = {
    "type": "object",
    "properties": {
        "schema_version": {"const": 1},
        "p": {"type": "integer"},
        "e": {"type": "integer"},
        "q": {"type": "integer"},
        "root_pairs": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "xi": {"type": "integer"},
                    "zeta": {"type": "integer"},
                    "g": {"type": "integer"},
                    "k1": {"type": "integer"},
                    "k2": {"type": "integer"},
                    "k_sum": {"type": "integer"},
                    "g_minus_one": {"type": "integer"},
                },
                "required": ["xi", "zeta", "g", "k1", "k2", "k_sum", "g_minus_one"],
                "additionalProperties": False,
            },
        },
        "configs_checked": {"type": "integer"},
        "violating_pairs": {"type": "array", "items": _WITNESS_ROOT},
        "status": {"enum": ["verified", "refuted"]},
    },
    "required": [
        "schema_version",
        "p",
        "e",
        "q",
        "root_pairs",
        "configs_checked",
        "violating_pairs",
        "status",
    ],
    "additionalProperties": False,
}

IDEAL_SCHEMA = {
    "type": "object",
    "properties": {
        "schema_version": {"const": 1},
        "q": {"type": "integer"},
        "p": {"type": "integer"},
        "e": {"type": "integer"},
        "period": {"type": "integer"},
        "all_zero": {"type": "boolean"},
        "status": {"enum": ["verified", "refuted"]},
    },
    "required": ["schema_version", "q", "p", "e", "period", "all_zero", "status"],
    "additionalProperties": False,
}

SWEEP_SCHEMA = {
    "type": "object",
    "properties": {
        "schema_version": {"const": 1},
        "max_q": {"type": "integer"},
        "e_filter": {"type": ["integer", "null"]},
        "summary": {
            "type": "object",
            "properties": {
                "moduli": {"type": "integer"},
                "verified": {"type": "integer"},
                "refuted": {"type": "integer"},
                "errors": {"type": "integer"},
                "refuted_q": {"type": "array", "items": {"type": "integer"}},
            },
            "required": ["moduli", "verified", "refuted", "errors", "refuted_q"],
            "additionalProperties": False,
        },
        "reports": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": _REPORT_FIELDS_SCHEMA,
                "required": _REPORT_REQUIRED,
                "additionalProperties": False,
            },
        },
    },
    "required": ["schema_version", "max_q", "e_filter", "summary", "reports"],
    "additionalProperties": False,
}
