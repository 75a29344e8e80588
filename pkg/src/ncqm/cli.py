"""Command-line front end emitting ``ncqm-report/1`` JSON reports.

Grammar: ``ncqm VERB [SUBVERB] [flags]``. Exit codes: 0 ok, 1 domain error,
2 usage error.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import errors
from .bopp import BoppParams, a_coefficient, bopp_matrix, realization_transfer, verify_sector_invariance
from .darboux import (
    QuadraticForm,
    canonicalize,
    intrinsic_canonicalization,
    is_darboux_map,
    quadratic_spectrum,
    reduction_verdict,
    williamson_frequencies,
)
from .group import (
    Functional,
    GroupElement,
    bch_multiply,
    coadjoint_act,
    connecting_element,
    decide_equivalence,
    factors_through_quotient,
    is_supported,
    local_exponent,
    orbit_data,
    quotient_project,
)
from .rational import parse_rational
from .sector import (
    CommutatorMatrix,
    RealizationMatrix,
    SectorLabel,
    central_character,
    omega_nc,
    pfaffian,
    push_commutators,
)
from .starprod import PolySymbol, moyal_star, pullback_linear, shadow_report, star_commutator

SCHEMA = "ncqm-report/1"

_RATIONAL_PATTERN = r"^-?\d+(/\d+)?$"

# JSON Schema (draft 2020-12) for a single report
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": SCHEMA,
    "type": "object",
    "required": ["schema", "command", "inputs", "status"],
    "properties": {
        "schema": {"const": SCHEMA},
        "command": {"type": "string"},
        "inputs": {"type": "object"},
        "status": {"enum": ["ok", "error"]},
        "outputs": {"type": "object"},
        "error_kind": {"type": "string"},
        "message": {"type": "string"},
    },
    "additionalProperties": False,
    "oneOf": [
        {"properties": {"status": {"const": "ok"}}, "required": ["outputs"], "not": {"required": ["error_kind"]}},
        {"properties": {"status": {"const": "error"}}, "required": ["error_kind"], "not": {"required": ["outputs"]}},
    ],
    "$defs": {"rational": {"type": "string", "pattern": _RATIONAL_PATTERN}},
}

GRAMMAR: Dict[str, tuple] = {
    "sector": ("classify", "omega", "pfaffian"),
    "bopp": ("matrix", "verify", "transfer"),
    "darboux": ("canonicalize", "intrinsic", "check"),
    "spectrum": ("frequencies",),
    "group": ("multiply", "project", "inverse", "cocycle"),
    "orbit": ("data", "act", "connect"),
    "star": ("product", "commutator", "pullback", "shadow"),
    "verdict": ("",),
}

# flag name -> help text; every verb accepts the label flags
FLAGS = {
    "hbar": "hbar as p/q",
    "theta": "theta as p/q (default 0)",
    "b": "b_in as p/q (default 0)",
    "r": "Bopp parameter r",
    "s": "Bopp parameter s",
    "to-r": "target Bopp parameter r'",
    "to-s": "target Bopp parameter s'",
    "matrix": "JSON matrix of rational strings",
    "ham": "JSON symmetric matrix M of H = 1/2 eta^T M eta",
    "quanta": "JSON list of occupation numbers",
    "g": "JSON group element, or JSON polynomial symbol for `star`",
    "h": "JSON group element",
    "f": "JSON polynomial symbol",
    "functional": "JSON functional {a1..a3, b1, b2, c1, c2}",
    "target": "JSON target functional",
    "sweep": "JSON file holding a list of labels [hbar, theta, b]",
}

USAGE_KINDS = {errors.ParseError.kind, errors.UnknownCommand.kind}

# closed error taxonomy: every library error maps to its stable kind string
ERROR_KINDS = {cls: cls.kind for cls in errors.ALL_ERRORS}


@dataclass(frozen=True)
class Command:
    verb: str
    subverb: str = ""
    options: Dict[str, str] = field(default_factory=dict)

    @property
    def text(self) -> str:
        return f"{self.verb} {self.subverb}".strip()


@dataclass
class Report:
    command: str
    inputs: dict
    outputs: Optional[dict] = None
    status: str = "ok"
    error_kind: Optional[str] = None
    message: Optional[str] = None
    narrative: Optional[str] = None

    def to_dict(self):
        d = {"schema": SCHEMA, "command": self.command, "inputs": self.inputs, "status": self.status}
        if self.status == "ok":
            d["outputs"] = self.outputs
        else:
            d["error_kind"] = self.error_kind
            d["message"] = self.message
        return d


class _UsageError(Exception):
    pass


# -- option helpers ----------------------------------------------------------


def _rat(opts, name, default=None) -> Fraction:
    if name not in opts or opts[name] is None:
        if default is None:
            raise errors.ParseError(f"missing required flag --{name}")
        return Fraction(default)
    return parse_rational(opts[name])


def _json(opts, name):
    if opts.get(name) is None:
        raise errors.ParseError(f"missing required flag --{name}")
    try:
        return json.loads(opts[name])
    except json.JSONDecodeError as exc:
        raise errors.ParseError(f"--{name} is not valid JSON: {exc}") from None


def _rat_matrix(opts, name):
    data = _json(opts, name)
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise errors.ParseError(f"--{name} must be a JSON array of arrays")
    return tuple(tuple(parse_rational(str(x)) for x in row) for row in data)


def _label(opts) -> SectorLabel:
    return SectorLabel(_rat(opts, "hbar"), _rat(opts, "theta", 0), _rat(opts, "b", 0))


def _omega(opts) -> CommutatorMatrix:
    if opts.get("matrix") is not None:
        return CommutatorMatrix(_rat_matrix(opts, "matrix"))
    return omega_nc(_label(opts))


def _label_inputs(opts):
    return {"label": _label(opts).to_dict()}


def _poly(opts, name) -> PolySymbol:
    data = _json(opts, name)
    if isinstance(data, str):
        return PolySymbol.variable(data)
    return PolySymbol.from_records(data)


# -- handlers ----------------------------------------------------------------


def _sector_classify(o):
    label = _label(o)
    if not is_supported(label):
        raise errors.UnsupportedStratum(
            f"label ({label.hbar}, {label.theta}, {label.b_in}) lies off the regular stratum"
        )
    om = omega_nc(label)
    out = {
        "kappa": str(label.kappa),
        "regular": label.is_regular,
        "generic": label.is_generic,
        "omega": om.to_list(),
        "pfaffian": str(pfaffian(om)),
        "central_character": central_character(label).to_list(),
        "factors_through_quotient": factors_through_quotient(label),
    }
    return _label_inputs(o), out, None


def _sector_omega(o):
    return _label_inputs(o), {"omega": omega_nc(_label(o)).to_list()}, None


def _sector_pfaffian(o):
    om = _omega(o)
    return {"omega": om.to_list()}, {"pfaffian": str(pfaffian(om))}, None


def _bopp_params(o, r="r", s="s"):
    return BoppParams(_rat(o, r), _rat(o, s))


def _bopp_matrix(o):
    label, params = _label(o), _bopp_params(o)
    real = bopp_matrix(label, params)
    out = {
        "a": str(a_coefficient(label, params.r)),
        "matrix": real.matrix.to_list(),
        "det": str(real.matrix.det()),
    }
    return {**_label_inputs(o), "r": str(params.r), "s": str(params.s)}, out, None


def _bopp_verify(o):
    label, params = _label(o), _bopp_params(o)
    real = bopp_matrix(label, params)
    ok = verify_sector_invariance(real)
    return {**_label_inputs(o), "r": str(params.r), "s": str(params.s)}, {"sector_invariant": ok}, None


def _bopp_transfer(o):
    label, src, dst = _label(o), _bopp_params(o), _bopp_params(o, "to-r", "to-s")
    g = realization_transfer(bopp_matrix(label, src), dst)
    om = omega_nc(label)
    out = {"matrix": g.to_list(), "preserves_omega": push_commutators(g, om) == om}
    inputs = {**_label_inputs(o), "r": str(src.r), "s": str(src.s), "to_r": str(dst.r), "to_s": str(dst.s)}
    return inputs, out, None


def _darboux_canonicalize(o):
    om = _omega(o)
    hbar = _rat(o, "hbar") if o.get("hbar") is not None else Fraction(1)
    d = canonicalize(om, hbar)
    out = {"matrix": d.matrix.to_list(), "verified": is_darboux_map(d.matrix, om, hbar)}
    return {"omega": om.to_list(), "hbar": str(hbar)}, out, None


def _darboux_intrinsic(o):
    label = _label(o)
    d = intrinsic_canonicalization(label)
    out = {"matrix": d.matrix.to_list(), "verified": is_darboux_map(d.matrix, d.omega, label.hbar)}
    return _label_inputs(o), out, None


def _darboux_check(o):
    label = _label(o)
    t = RealizationMatrix(_rat_matrix(o, "matrix"))
    ok = is_darboux_map(t, omega_nc(label), label.hbar)
    return {**_label_inputs(o), "matrix": t.to_list()}, {"is_darboux_map": ok}, None


def _spectrum(o):
    m = QuadraticForm(_rat_matrix(o, "ham"))
    om = _omega(o)
    res = williamson_frequencies(m, om)
    quanta = _json(o, "quanta") if o.get("quanta") is not None else [0] * len(res.frequencies)
    out = {**res.to_dict(), "quanta": quanta, "energy": quadratic_spectrum(res, quanta)}
    return {"ham": m.to_list(), "omega": om.to_list()}, out, None


def _group_el(o, name) -> GroupElement:
    return GroupElement.from_dict(_json(o, name))


def _group_multiply(o):
    g, h = _group_el(o, "g"), _group_el(o, "h")
    return {"g": g.to_dict(), "h": h.to_dict()}, {"product": bch_multiply(g, h).to_dict()}, None


def _group_project(o):
    g = _group_el(o, "g")
    return {"g": g.to_dict()}, {"projection": quotient_project(g).to_dict()}, None


def _group_inverse(o):
    g = _group_el(o, "g")
    return {"g": g.to_dict()}, {"inverse": g.inverse().to_dict()}, None


def _group_cocycle(o):
    g, h = _group_el(o, "g"), _group_el(o, "h")
    return {"g": g.to_dict(), "h": h.to_dict()}, {"local_exponent": [str(c) for c in local_exponent(g, h)]}, None


def _functional(o, name="functional") -> Functional:
    return Functional.from_dict(_json(o, name))


def _orbit_data(o):
    l = _functional(o)
    return {"functional": l.to_dict()}, orbit_data(l).to_dict(), None


def _orbit_act(o):
    g, l = _group_el(o, "g"), _functional(o)
    return {"g": g.to_dict(), "functional": l.to_dict()}, {"functional": coadjoint_act(g, l).to_dict()}, None


def _orbit_connect(o):
    l, t = _functional(o), _functional(o, "target")
    g = connecting_element(l, t)
    out = {"same_orbit": g is not None, "element": g.to_dict() if g is not None else None}
    return {"functional": l.to_dict(), "target": t.to_dict()}, out, None


def _star_product(o):
    f, g, om = _poly(o, "f"), _poly(o, "g"), _omega(o)
    return {"f": f.to_records(), "g": g.to_records(), "omega": om.to_list()}, {"product": moyal_star(f, g, om).to_records()}, None


def _star_commutator(o):
    f, g, om = _poly(o, "f"), _poly(o, "g"), _omega(o)
    out = {"commutator": star_commutator(f, g, om).to_records()}
    return {"f": f.to_records(), "g": g.to_records(), "omega": om.to_list()}, out, None


def _star_pullback(o):
    f = _poly(o, "f")
    t = RealizationMatrix(_rat_matrix(o, "matrix"))
    return {"f": f.to_records(), "matrix": t.to_list()}, {"pullback": pullback_linear(f, t).to_records()}, None


def _star_shadow(o):
    rep = shadow_report(_label(o))
    out = rep.to_dict()
    narrative = out.pop("narrative")
    out.pop("label")
    return _label_inputs(o), out, narrative


def _verdict(o):
    label = _label(o)
    v = reduction_verdict(label)
    eq = decide_equivalence(label, label.quotient_partner())
    out = {
        "darboux_exists": v.darboux_exists,
        "conjugation_possible": v.conjugation_possible,
        "sectors_equivalent": v.sectors_equivalent,
        "equivalence": eq.to_dict(),
        "self_equivalence": decide_equivalence(label, label).status.value,
    }
    return _label_inputs(o), out, v.narrative


HANDLERS: Dict[tuple, Callable] = {
    ("sector", "classify"): _sector_classify,
    ("sector", "omega"): _sector_omega,
    ("sector", "pfaffian"): _sector_pfaffian,
    ("bopp", "matrix"): _bopp_matrix,
    ("bopp", "verify"): _bopp_verify,
    ("bopp", "transfer"): _bopp_transfer,
    ("darboux", "canonicalize"): _darboux_canonicalize,
    ("darboux", "intrinsic"): _darboux_intrinsic,
    ("darboux", "check"): _darboux_check,
    ("spectrum", "frequencies"): _spectrum,
    ("group", "multiply"): _group_multiply,
    ("group", "project"): _group_project,
    ("group", "inverse"): _group_inverse,
    ("group", "cocycle"): _group_cocycle,
    ("orbit", "data"): _orbit_data,
    ("orbit", "act"): _orbit_act,
    ("orbit", "connect"): _orbit_connect,
    ("star", "product"): _star_product,
    ("star", "commutator"): _star_commutator,
    ("star", "pullback"): _star_pullback,
    ("star", "shadow"): _star_shadow,
    ("verdict", ""): _verdict,
}


def dispatch(cmd: Command) -> Report:
    """Route a command to its library call and wrap the result in a Report."""
    handler = HANDLERS.get((cmd.verb, cmd.subverb))
    opts = {k: v for k, v in cmd.options.items() if v is not None}
    if handler is None:
        return Report(cmd.text, opts, status="error", error_kind=errors.UnknownCommand.kind,
                      message=f"unknown command {cmd.text!r}")
    try:
        inputs, outputs, narrative = handler(opts)
    except errors.NCQMError as exc:
        return Report(cmd.text, opts, status="error", error_kind=ERROR_KINDS[type(exc)], message=str(exc))
    return Report(cmd.text, inputs, outputs, narrative=narrative)


def exit_code(report: Report) -> int:
    if report.status == "ok":
        return 0
    return 2 if report.error_kind in USAGE_KINDS else 1


def _render_text(report: Report) -> str:
    lines = [f"{report.command}: {report.status}"]
    if report.status != "ok":
        lines.append(f"  {report.error_kind}: {report.message}")
        return "\n".join(lines)
    for k, v in report.outputs.items():
        lines.append(f"  {k}: {json.dumps(v, sort_keys=True)}")
    if report.narrative:
        lines.append("")
        lines.append(report.narrative)
    return "\n".join(lines)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def emit(reports, mode: str = "json", stdout=None, stderr=None, batch: bool = False) -> int:
    """Write one report (or a sweep array) and return the process exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if isinstance(reports, Report):
        reports = [reports]
    if mode == "json":
        payload = [r.to_dict() for r in reports] if batch else reports[0].to_dict()
        stdout.write(dumps(payload) + "\n")
    else:
        stdout.write("\n\n".join(_render_text(r) for r in reports) + "\n")
    for r in reports:
        if r.status != "ok":
            stderr.write(f"error [{r.error_kind}] {r.command}: {r.message}\n")
    return max(exit_code(r) for r in reports)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncqm", description=__doc__.splitlines()[0])
    verbs = parser.add_subparsers(dest="verb", required=True)
    for verb, subverbs in GRAMMAR.items():
        vp = verbs.add_parser(verb)
        if subverbs != ("",):
            vp.add_argument("subverb", nargs="?" if len(subverbs) == 1 else None,
                            choices=subverbs, default=subverbs[0])
        for flag, help_text in FLAGS.items():
            vp.add_argument(f"--{flag}", dest=flag.replace("-", "_"), help=help_text)
        vp.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _sweep_labels(path: str) -> List[dict]:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise _UsageError("sweep file must hold a JSON list")
    out = []
    for entry in data:
        if isinstance(entry, dict):
            hbar, theta, b = entry.get("hbar"), entry.get("theta", "0"), entry.get("b", entry.get("b_in", "0"))
        elif isinstance(entry, list) and len(entry) == 3:
            hbar, theta, b = entry
        else:
            raise _UsageError(f"bad sweep entry {entry!r}")
        out.append({"hbar": str(hbar), "theta": str(theta), "b": str(b)})
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    mode = args.format
    opts = {
        flag: getattr(args, flag.replace("-", "_"))
        for flag in FLAGS
        if flag != "sweep" and getattr(args, flag.replace("-", "_")) is not None
    }
    subverb = getattr(args, "subverb", "") or ""
    if args.sweep is not None:
        try:
            labels = _sweep_labels(args.sweep)
        except (OSError, json.JSONDecodeError, _UsageError) as exc:
            parser.print_usage(sys.stderr)
            sys.stderr.write(f"ncqm: error: --sweep: {exc}\n")
            return 2
        reports = [dispatch(Command(args.verb, subverb, {**opts, **lab})) for lab in labels]
        return emit(reports, mode, batch=True)
    report = dispatch(Command(args.verb, subverb, opts))
    if exit_code(report) == 2:
        parser.print_usage(sys.stderr)
    return emit(report, mode)


if __name__ == "__main__":
    sys.exit(main())
