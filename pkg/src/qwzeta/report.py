"""Analysis reports: assembly, JSON (de)serialization, and the embedded schema."""

from __future__ import annotations

import copy
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Any

from . import reference as ref
from .absolute import (
    functional_eq_residual_estimate,
    log_epsilon_f_estimate,
    log_zeta_f_estimate,
    plan_absolute_zeta,
    sample_grid,
)
from .algebra import format_quadrat
from .barnes import DEFAULT_CONFIG, BarnesEvalConfig
from .periodicity import PeriodResult, period_of_operator
from .spectral import cross_check_factorization
from .walks import CoinType, Family, WalkSpec, build_operator, check_unitary
from .walkzeta import ZetaProductForm, automorphic_weight, zeta_from_period

SCHEMA_VERSION = "1.0"


@dataclass
class Discrepancy:
    id: str
    severity: str
    message: str


@dataclass
class AnalysisReport:
    family: str
    coin_type: str
    n: int
    unitary: bool
    char_poly: list[str]
    coefficient_ring: str
    cyclotomic_factorization: dict[str, str]
    residual_degree: int
    period: str
    zeta_form: dict[str, Any] | None = None
    weight: dict[str, Any] | None = None
    abs_zeta_samples: list[dict[str, Any]] | None = None
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def spec(self) -> WalkSpec:
        return WalkSpec(Family(self.family), CoinType(self.coin_type), self.n)

    def to_dict(self) -> dict[str, Any]:
        return {"version": SCHEMA_VERSION, "kind": "analysis", "report": asdict(self)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> AnalysisReport:
        body = dict(data["report"])
        body["discrepancies"] = [Discrepancy(**d) for d in body.get("discrepancies", [])]
        return cls(**body)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        return cls.from_dict(json.loads(text))


def form_to_dict(form: ZetaProductForm) -> dict[str, Any]:
    return {
        "sign": form.sign,
        "l": form.l,
        "numer_exps": list(form.numer_exps),
        "denom_exps": list(form.denom_exps),
        "rendered": form.render(),
    }


def form_from_dict(data: dict[str, Any]) -> ZetaProductForm:
    return ZetaProductForm(data["sign"], data["l"], tuple(data["numer_exps"]), tuple(data["denom_exps"]))


def known_discrepancies(spec: WalkSpec, result: PeriodResult, form: ZetaProductForm | None) -> list[Discrepancy]:
    """WARN-class differences between the exact results and the published displays."""
    out = []
    if spec.family is Family.GROVER3 and spec.coin_type is CoinType.F:
        check = cross_check_factorization(spec, 100, result.char_poly)
        if not check.consistent:
            out.append(Discrepancy(
                ref.WARN_GF_FACT, "WARN",
                f"printed F-type product formula disagrees with det(xI-U) (max rel err {check.max_rel_err:.3g})",
            ))
        if form is not None and spec in ref.PRINTED_Z_SIGNS and ref.PRINTED_Z_SIGNS[spec] != form.sign:
            out.append(Discrepancy(
                ref.WARN_GF_SIGN, "WARN",
                f"printed Z_f carries sign {ref.PRINTED_Z_SIGNS[spec]:+d}, exact determinant gives {form.sign:+d}",
            ))
    if spec == WalkSpec(Family.HADAMARD2, CoinType.F, 8):
        out.append(Discrepancy(
            ref.WARN_H8_PHI6, "WARN",
            "printed factorization writes Phi_6(2)^2 where the exact charpoly has Phi_6(x)^2",
        ))
    if spec in ref.PRINTED_CHAR_POLYS:
        printed = ref.PRINTED_CHAR_POLYS[spec]
        exact = [c.rat if c.is_rational() else None for c in result.char_poly.poly.coeffs]
        bad = [k for k in range(len(printed)) if exact[k] != printed[k]]
        if bad:
            out.append(Discrepancy(
                ref.WARN_HM16_EXP, "WARN",
                f"printed expansion differs from det(xI-U) at {len(bad)} coefficients (x^{bad[0]} first)",
            ))
    if spec == WalkSpec(Family.GROVER3, CoinType.M, 2):
        out.append(Discrepancy(
            ref.WARN_GM2_DISPLAY, "WARN",
            "printed f_2 omits the powers x^3 and x; exact coefficients are reported",
        ))
    return out


def abs_zeta_samples(form: ZetaProductForm, points: list[float] | None, cfg: BarnesEvalConfig) -> list[dict[str, Any]]:
    plan = plan_absolute_zeta(form)
    rows = []
    for s in points if points is not None else sample_grid(plan, 4):
        lz = log_zeta_f_estimate(s, plan, cfg)
        le = log_epsilon_f_estimate(s, plan, cfg)
        res = functional_eq_residual_estimate(s, plan, cfg)
        zeta = math.exp(lz.value)
        eps = math.exp(le.value)
        rows.append({
            "s": s,
            "zeta_f": zeta,
            # a log error delta is a relative error of about delta
            "zeta_f_tol": abs(zeta) * lz.error,
            "epsilon_f": eps,
            "epsilon_f_tol": abs(eps) * le.error,
            "residual": res.value,
            "residual_tol": res.error,
        })
    return rows


def analyze(spec: WalkSpec, points: list[float] | None = None, cfg: BarnesEvalConfig = DEFAULT_CONFIG) -> AnalysisReport:
    """Run the full pipeline on one walk."""
    op = build_operator(spec)
    unitary = check_unitary(op)
    result = period_of_operator(op)
    form = None
    zeta_form = weight = samples = None
    if result.is_finite:
        form = zeta_from_period(result)
        zeta_form = form_to_dict(form)
        w = automorphic_weight(form)
        weight = {"C": w.C, "D": w.D, "max_rel_residual": w.max_rel_residual, "tol": 1e-9}
        samples = abs_zeta_samples(form, points, cfg)
    return AnalysisReport(
        family=spec.family.value,
        coin_type=spec.coin_type.value,
        n=spec.n,
        unitary=unitary,
        char_poly=[format_quadrat(c) for c in result.char_poly.poly.coeffs],
        coefficient_ring=result.coefficient_ring.value,
        cyclotomic_factorization={str(k): str(v) for k, v in sorted(result.cyclotomic_part.items())},
        residual_degree=max(result.residual.degree, 0),
        period=result.render_period(),
        zeta_form=zeta_form,
        weight=weight,
        abs_zeta_samples=samples,
        discrepancies=known_discrepancies(spec, result, form),
    )


def render_text(report: AnalysisReport) -> str:
    lines = [
        f"walk              {report.spec.label}",
        f"unitary           {report.unitary}",
        f"char poly         {_poly_text(report.char_poly)}",
        f"coefficient ring  {report.coefficient_ring}",
        "cyclotomic part   " + (_phi_text(report.cyclotomic_factorization) or "none"),
        f"residual degree   {report.residual_degree}",
        f"period            {report.period}",
    ]
    if report.zeta_form:
        lines.append(f"zeta(u)           {report.zeta_form['rendered']}")
    if report.weight:
        lines.append(f"weight            C={report.weight['C']:+d} D={report.weight['D']}")
    if report.abs_zeta_samples:
        lines.append(f"{'s':>12} {'zeta_f(s)':>22} {'eps_f(s)':>22} {'residual':>10}")
        for row in report.abs_zeta_samples:
            lines.append(f"{row['s']:>12.6g} {row['zeta_f']:>22.15g} {row['epsilon_f']:>22.15g} {row['residual']:>10.2e}")
    for d in report.discrepancies:
        lines.append(f"{d.severity} {d.id}: {d.message}")
    return "\n".join(lines)


def _phi_text(mult: dict[str, str]) -> str:
    return " ".join(f"Phi_{k}" if v == "1" else f"Phi_{k}^{v}" for k, v in mult.items())


def _poly_text(coeffs: list[str]) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == "0":
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if mono and c == "1":
            terms.append(mono)
        elif mono and c == "-1":
            terms.append("-" + mono)
        else:
            body = f"({c})" if ("√" in c and mono) else c
            terms.append(body + (f"*{mono}" if mono else ""))
    return " + ".join(terms).replace("+ -", "- ") or "0"


# -- schema ----------------------------------------------------------------------

_STR_RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?([+-]?\d+(/\d+)?√2)?$|^-?\d+(/\d+)?√2$"}
_FLOAT = {"type": "number"}
_SAMPLE_FIELDS = ["s", "zeta_f", "zeta_f_tol", "epsilon_f", "epsilon_f_tol", "residual", "residual_tol"]

_REPORT = {
    "type": "object",
    "additionalProperties": False,
    "required": [
        "family", "coin_type", "n", "unitary", "char_poly", "coefficient_ring",
        "cyclotomic_factorization", "residual_degree", "period", "zeta_form",
        "weight", "abs_zeta_samples", "discrepancies",
    ],
    "properties": {
        "family": {"enum": [f.value for f in Family]},
        "coin_type": {"enum": [c.value for c in CoinType]},
        "n": {"type": "integer", "minimum": 2},
        "unitary": {"type": "boolean"},
        "char_poly": {"type": "array", "items": _STR_RATIONAL, "minItems": 2},
        "coefficient_ring": {"enum": ["Z", "QnotZ", "notQ"]},
        "cyclotomic_factorization": {
            "type": "object",
            "patternProperties": {r"^\d+$": {"type": "string", "pattern": r"^\d+(/\d+)?$"}},
            "additionalProperties": False,
        },
        "residual_degree": {"type": "integer", "minimum": 0},
        "period": {"type": "string", "pattern": r"^(inf|[1-9]\d*)$"},
        "zeta_form": {"oneOf": [{"type": "null"}, {"$ref": "#/$defs/form"}]},
        "weight": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["C", "D", "max_rel_residual", "tol"],
                    "properties": {
                        "C": {"enum": [1, -1]},
                        "D": {"type": "integer"},
                        "max_rel_residual": _FLOAT,
                        "tol": _FLOAT,
                    },
                },
            ]
        },
        "abs_zeta_samples": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": _SAMPLE_FIELDS,
                        "properties": {k: _FLOAT for k in _SAMPLE_FIELDS},
                    },
                },
            ]
        },
        "discrepancies": {"type": "array", "items": {"$ref": "#/$defs/discrepancy"}},
    },
}

_DEFS = {
    "form": {
        "type": "object",
        "additionalProperties": False,
        "required": ["sign", "l", "numer_exps", "denom_exps", "rendered"],
        "properties": {
            "sign": {"enum": [1, -1]},
            "l": {"type": "integer"},
            "numer_exps": {"type": "array", "items": {"type": "integer", "minimum": 1}},
            "denom_exps": {"type": "array", "items": {"type": "integer", "minimum": 1}},
            "rendered": {"type": "string"},
        },
    },
    "discrepancy": {
        "type": "object",
        "additionalProperties": False,
        "required": ["id", "severity", "message"],
        "properties": {
            "id": {"type": "string", "pattern": r"^[A-Z0-9-]+$"},
            "severity": {"enum": ["WARN"]},
            "message": {"type": "string"},
        },
    },
    "check": {
        "type": "object",
        "additionalProperties": False,
        "required": ["suite", "name", "status", "message"],
        "properties": {
            "suite": {"type": "string"},
            "name": {"type": "string"},
            "status": {"enum": ["PASS", "FAIL", "WARN"]},
            "message": {"type": "string"},
            "id": {"type": "string"},
            "value": _FLOAT,
            "tol": _FLOAT,
        },
    },
    "report": _REPORT,
}

_ENVELOPE = {"version": {"const": SCHEMA_VERSION}}

SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": f"urn:qwzeta:report:{SCHEMA_VERSION}",
    "title": "qwzeta output",
    "$defs": _DEFS,
    "oneOf": [
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["version", "kind", "report"],
            "properties": {**_ENVELOPE, "kind": {"const": "analysis"}, "report": {"$ref": "#/$defs/report"}},
        },
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["version", "kind", "rows"],
            "properties": {
                **_ENVELOPE,
                "kind": {"const": "sweep"},
                "rows": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["family", "coin_type", "n", "period", "coefficient_ring", "cyclotomic_factorization"],
                        "properties": {
                            "family": _REPORT["properties"]["family"],
                            "coin_type": _REPORT["properties"]["coin_type"],
                            "n": _REPORT["properties"]["n"],
                            "period": _REPORT["properties"]["period"],
                            "coefficient_ring": _REPORT["properties"]["coefficient_ring"],
                            "cyclotomic_factorization": _REPORT["properties"]["cyclotomic_factorization"],
                        },
                    },
                },
            },
        },
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["version", "kind", "suite", "status", "checks"],
            "properties": {
                **_ENVELOPE,
                "kind": {"const": "verify"},
                "suite": {"type": "string"},
                "status": {"enum": ["PASS", "FAIL", "WARN"]},
                "checks": {"type": "array", "items": {"$ref": "#/$defs/check"}},
            },
        },
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["version", "kind", "quantity", "form", "rows"],
            "properties": {
                **_ENVELOPE,
                "kind": {"const": "eval"},
                "quantity": {"enum": ["Z", "zeta", "epsilon", "residual"]},
                "form": {"$ref": "#/$defs/form"},
                "rows": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["point", "status"],
                        "properties": {
                            "point": {"type": "array", "items": _FLOAT, "minItems": 1, "maxItems": 2},
                            "status": {"enum": ["ok", "error"]},
                            "value": _FLOAT,
                            "imag": _FLOAT,
                            "tol": _FLOAT,
                            "error": {"type": "string"},
                        },
                    },
                },
            },
        },
    ],
}


def schema() -> dict[str, Any]:
    return copy.deepcopy(SCHEMA)


__all__ = [
    "AnalysisReport",
    "Discrepancy",
    "SCHEMA",
    "SCHEMA_VERSION",
    "analyze",
    "form_from_dict",
    "form_to_dict",
    "known_discrepancies",
    "render_text",
    "schema",
]
