"""Command line front end: ``hb-fiber <command> [file] [options]``.

Every command produces one report dictionary.  It is printed as
deterministic JSON (sorted keys, no timings) and/or as plain text.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys

from .errors import HBFiberError, HypothesisFailure, InternalAnomaly
from .multiplicity import (
    MuVector,
    elementary_symmetric,
    lemma_identity,
    lemma_instances,
    mu_grid,
    multiplicity_from_m,
    multiplicity_report,
)
from .oracles import (
    generic_fiber_degree,
    generic_fiber_trials,
    j_mult_sample,
    map_degree_report,
    saturated_fiber_sample,
)
from .parser import parse_ideal_file
from .resolution import g_condition, hilbert_burch

SCHEMA = "hb-fiber/1"
FILE_COMMANDS = ("resolve", "gcheck", "mult", "jmult", "mapdeg", "verify")
COMMANDS = FILE_COMMANDS + ("identities",)

EXIT_OK = 0
EXIT_HYPOTHESIS = 3
EXIT_DISAGREE = 4


def _num(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def claim(value, provenance):
    return {"value": _num(value), "provenance": provenance}


class Context:
    """Parsed input plus lazily computed Hilbert-Burch data."""

    def __init__(self, parsed):
        self.parsed = parsed
        self.hb = hilbert_burch(parsed.ideal)
        self.gcond = g_condition(self.hb)

    @property
    def mv(self):
        return MuVector(self.hb.r, self.hb.mu)

    def hypotheses(self):
        hb, gc = self.hb, self.gcond
        return {
            "height": 2,
            "r": hb.r,
            "s": hb.s,
            "d": hb.d,
            "mu": list(hb.mu),
            "g_condition": [
                {"i": row.i, "t": row.t, "height": _num(row.height),
                 "threshold": row.threshold, "passed": row.passed}
                for row in gc.rows
            ],
            "g_passed": gc.passed,
            "hypothesis_violated": not gc.passed,
        }

    def violation_warnings(self):
        if self.gcond.passed:
            return []
        rows = ", ".join(f"i={row.i} (height {_num(row.height)})" for row in self.gcond.failures())
        return [f"G condition fails at {rows}; formula values carry no guarantee"]


def _sample_table(sample):
    return [{"n": n, "value": v} for n, v in sample.samples]


def cmd_resolve(ctx, opts):
    hb = ctx.hb
    return {
        "phi": hb.phi.as_lists(),
        "column_degrees": list(hb.phi.column_degrees),
        "generators": [str(g) for g in hb.gens],
        "scalar": str(ctx.parsed.field.signed(hb.scalar)) if ctx.parsed.field.is_prime else str(hb.scalar),
    }, [], EXIT_OK


def cmd_gcheck(ctx, opts):
    failures = [row.i for row in ctx.gcond.failures()]
    result = {"passed": ctx.gcond.passed, "failing_rows": failures}
    return result, [], EXIT_OK if ctx.gcond.passed else EXIT_HYPOTHESIS


def cmd_mult(ctx, opts):
    rep = multiplicity_report(ctx.hb.d, ctx.mv)
    result = {
        "e_r": claim(rep.e_r, "formula"),
        "m": claim(list(rep.m), "formula"),
        "alternating_sum": claim(rep.alt_sum, "formula"),
        "j": claim(rep.j, "formula"),
        "consistent": rep.consistent,
    }
    return result, [], EXIT_OK


def _j_oracle(ctx, opts):
    sample = j_mult_sample(ctx.parsed.ideal, opts.n_max)
    return sample, {
        "value": sample.inferred_j,
        "provenance": "oracle",
        "stable": sample.stable,
        "lengths": _sample_table(sample),
        "last_differences": sample.differences[-1],
    }


def cmd_jmult(ctx, opts):
    j = ctx.hb.d * elementary_symmetric(ctx.hb.r, ctx.hb.mu)
    result = {"j": claim(j, "formula")}
    warnings = []
    if opts.oracle:
        sample, table = _j_oracle(ctx, opts)
        result["j_oracle"] = table
        result["agree"] = sample.inferred_j == j
        if not sample.stable:
            warnings.append("j-length differences not stable; raise --n-max")
    return result, warnings, EXIT_OK


def _map_block(ctx, opts, fiber):
    rep = map_degree_report(ctx.hb.gens, ctx.hb, ctx.gcond)
    block = {
        "dimY": claim(rep.dimY, "oracle"),
        "degY": claim(rep.degY, "oracle"),
        "e_r": claim(rep.e_r, "formula"),
        "degF": claim(rep.degF, "formula/oracle"),
        "birational": claim(rep.birational, "formula/oracle"),
        "kernel": [str(g) for g in rep.kernel_gens],
        "product_law": rep.check(),
    }
    warnings = []
    if fiber:
        if ctx.parsed.field.is_prime:
            trials = generic_fiber_trials(ctx.hb.gens, opts.trials, opts.seed)
            fd = generic_fiber_degree(ctx.hb.gens, opts.trials, opts.seed)
            block["fiber_degree"] = {"value": fd, "provenance": "heuristic", "trials": trials}
            if fd != rep.degF:
                warnings.append(f"heuristic fiber degree {fd} differs from degF {rep.degF}")
        else:
            warnings.append("fiber sampling skipped over the rationals")
    return rep, block, warnings


def cmd_mapdeg(ctx, opts):
    _, block, warnings = _map_block(ctx, opts, opts.fiber)
    return block, warnings, EXIT_OK


def cmd_verify(ctx, opts):
    hb = ctx.hb
    e = elementary_symmetric(hb.r, hb.mu)
    warnings = []
    sat = saturated_fiber_sample(ctx.parsed.ideal, hb.d, opts.n_max)
    if not sat.stable:
        warnings.append("saturated fiber differences not stable; raise --n-max")
    jsample, jtable = _j_oracle(ctx, opts)
    if not jsample.stable:
        warnings.append("j-length differences not stable; raise --n-max")
    rep, mapblock, mapwarn = _map_block(ctx, opts, ctx.parsed.field.is_prime)
    warnings += mapwarn
    agreements = {
        "multiplicity": sat.inferred_multiplicity == e,
        "j": jsample.inferred_j == hb.d * e,
        "map_degree": rep.check(),
    }
    result = {
        "e_r": claim(e, "formula"),
        "e_oracle": {
            "value": sat.inferred_multiplicity,
            "provenance": "oracle",
            "stable": sat.stable,
            "dims": _sample_table(sat),
            "last_differences": sat.differences[-1],
        },
        "j": claim(hb.d * e, "formula"),
        "j_oracle": jtable,
        "map": mapblock,
        "agreements": agreements,
        "agree": all(agreements.values()),
    }
    if not ctx.gcond.passed:
        code = EXIT_HYPOTHESIS
    else:
        code = EXIT_OK if result["agree"] else EXIT_DISAGREE
    return result, warnings, code


def cmd_identities(opts):
    counts = {}
    failures = []
    for part, params in lemma_instances(opts.r_max, opts.s_max, opts.mu_max):
        counts[part] = counts.get(part, 0) + 1
        if not lemma_identity(part, **params):
            failures.append({"part": part, **{k: list(v) if isinstance(v, tuple) else v
                                               for k, v in params.items()}})
    equiv = 0
    equiv_fail = []
    for mv in mu_grid(opts.r_max, opts.s_max, opts.mu_max):
        equiv += 1
        if multiplicity_from_m(mv) != elementary_symmetric(mv.r, mv.mu):
            equiv_fail.append({"r": mv.r, "mu": list(mv.mu)})
    ok = not failures and not equiv_fail
    result = {
        "bounds": {"r_max": opts.r_max, "s_max": opts.s_max, "mu_max": opts.mu_max},
        "instances": counts,
        "failures": failures,
        "formula_equivalence": {"checked": equiv, "failures": equiv_fail},
        "all_true": ok,
    }
    return result, [], EXIT_OK if ok else EXIT_DISAGREE


HANDLERS = {
    "resolve": cmd_resolve,
    "gcheck": cmd_gcheck,
    "mult": cmd_mult,
    "jmult": cmd_jmult,
    "mapdeg": cmd_mapdeg,
    "verify": cmd_verify,
}


def _options_block(command, opts):
    if command == "identities":
        return {"r_max": opts.r_max, "s_max": opts.s_max, "mu_max": opts.mu_max}
    block = {"n_max": opts.n_max, "seed": opts.seed, "trials": opts.trials}
    if command == "jmult":
        block["oracle"] = opts.oracle
    if command == "mapdeg":
        block["fiber"] = opts.fiber
    return block


def run(command, text, opts):
    """Execute one command on the ideal file contents ``text``; return (report, exit code)."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    report = {
        "schema": SCHEMA,
        "command": command,
        "options": _options_block(command, opts),
        "input": None,
        "hypotheses": None,
        "result": None,
        "warnings": [],
        "error": None,
    }
    ctx = None
    try:
        if command == "identities":
            result, warnings, code = cmd_identities(opts)
        else:
            report["input"] = {"digest": "sha256:" + hashlib.sha256(text.encode()).hexdigest()}
            parsed = parse_ideal_file(text)
            field = parsed.field
            report["input"].update({
                "field": field.p if field.is_prime else "rational",
                "ring": list(parsed.names),
                "gens": [str(g) for g in parsed.gens],
            })
            ctx = Context(parsed)
            report["hypotheses"] = ctx.hypotheses()
            result, warnings, code = HANDLERS[command](ctx, opts)
            warnings = ctx.violation_warnings() + warnings
        report["result"] = result
        report["warnings"] = warnings
    except HBFiberError as exc:
        report["error"] = {"code": exc.code, "kind": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, HypothesisFailure) and hasattr(exc, "height"):
            report["error"]["height"] = _num(exc.height)
        code = exc.exit_code
        if isinstance(exc, InternalAnomaly) and ctx is not None and not ctx.gcond.passed:
            # expected breakdown outside the hypotheses, not an internal fault
            report["warnings"] = ctx.violation_warnings()
            code = EXIT_HYPOTHESIS
    report["exit_code"] = code
    return report, code


def to_json(report):
    return json.dumps(report, sort_keys=True, indent=2)


def _fmt(value):
    if isinstance(value, dict) and "provenance" in value:
        return f"{_fmt(value['value'])} [{value['provenance']}]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    if value is None:
        return "none"
    return str(value)


def to_text(report):
    lines = [f"hb-fiber {report['command']}"]
    inp = report.get("input")
    if inp and "ring" in inp:
        lines.append(f"  field {inp['field']}, ring {' '.join(inp['ring'])}")
        lines.append("  gens: " + ", ".join(inp["gens"]))
    hyp = report.get("hypotheses")
    if hyp:
        lines.append(f"hypotheses: height 2, r={hyp['r']}, s={hyp['s']}, d={hyp['d']}, mu={_fmt(hyp['mu'])}")
        for row in hyp["g_condition"]:
            mark = "ok" if row["passed"] else "FAIL"
            lines.append(f"  G: ht I_{row['t']}(phi) = {row['height']} > {row['threshold']}  {mark}")
    res = report.get("result")
    if res:
        lines.append("result:")
        for key in sorted(res):
            value = res[key]
            if isinstance(value, dict) and "provenance" not in value:
                lines.append(f"  {key}:")
                for sub in sorted(value):
                    lines.append(f"    {sub}: {_fmt(value[sub])}")
            elif isinstance(value, dict) and ("dims" in value or "lengths" in value):
                table = value.get("dims") or value.get("lengths")
                lines.append(f"  {key}: {_fmt(value['value'])} [{value['provenance']}], stable={_fmt(value['stable'])}")
                lines.append("    n:     " + " ".join(f"{row['n']:>5}" for row in table))
                lines.append("    value: " + " ".join(f"{row['value']:>5}" for row in table))
            else:
                lines.append(f"  {key}: {_fmt(value)}")
    for w in report.get("warnings") or []:
        lines.append(f"warning: {w}")
    err = report.get("error")
    if err:
        lines.append(f"error [{err['code']}]: {err['message']}")
    lines.append(f"exit code {report['exit_code']}")
    return "\n".join(lines)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hb-fiber",
        description="Hilbert-Burch data, fiber multiplicities and map degrees of equigenerated ideals.",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", dest="fmt", action="store_const", const="json", help="print JSON only")
    g.add_argument("--text", dest="fmt", action="store_const", const="text", help="print text only")
    common = argparse.ArgumentParser(add_help=False, parents=[fmt])
    common.add_argument("file", help="ideal file, or - for stdin")
    common.add_argument("--n-max", type=int, default=6, help="oracle sweep bound (default 6)")
    common.add_argument("--seed", type=int, default=0, help="seed for fiber sampling (default 0)")
    common.add_argument("--trials", type=int, default=5, help="fiber sampling trials (default 5)")
    helps = {
        "resolve": "Hilbert-Burch matrix and syzygy degrees",
        "gcheck": "check the G condition via Fitting ideal heights",
        "mult": "saturated fiber multiplicity by formula",
        "jmult": "j-multiplicity by formula, optionally by oracle",
        "mapdeg": "image degree and degree of the rational map",
        "verify": "run formulas and oracles and compare",
    }
    for name in FILE_COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "jmult":
            p.add_argument("--oracle", action="store_true", help="also compute local cohomology lengths")
        if name == "mapdeg":
            p.add_argument("--fiber", action="store_true", help="add the heuristic fiber degree")
    p = sub.add_parser("identities", parents=[fmt], help="exhaustive check of the combinatorial identities")
    p.add_argument("--r-max", type=int, default=3, help="largest r (default 3)")
    p.add_argument("--s-max", type=int, default=5, help="largest s (default 5)")
    p.add_argument("--mu-max", type=int, default=4, help="largest entry of mu (default 4)")
    return ap


def main(argv=None):
    opts = build_parser().parse_args(argv)
    text = ""
    if opts.command != "identities":
        if opts.n_max < 0 or opts.trials < 1:
            print("hb-fiber: --n-max must be >= 0 and --trials >= 1", file=sys.stderr)
            return 2
        try:
            if opts.file == "-":
                text = sys.stdin.read()
            else:
                with open(opts.file, encoding="utf-8") as fh:
                    text = fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            print(f"hb-fiber: cannot read {opts.file}: {exc}", file=sys.stderr)
            return 2
    try:
        report, code = run(opts.command, text, opts)
    except ValueError as exc:
        # option values out of range for the oracles (e.g. --n-max too small)
        print(f"hb-fiber: {exc}", file=sys.stderr)
        return 2
    if opts.fmt in (None, "text"):
        print(to_text(report))
    if opts.fmt is None:
        print()
    if opts.fmt in (None, "json"):
        print(to_json(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
