"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 a verification (or reconstruction)
reported a failure.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import catalog, closedform, hankel, orthopoly
from .cfrac import BSeq, CFrac, cfrac_expand, convergents, powers_to_bseq
from .errors import InsufficientDepth, ZeroDeterminant
from .exactalg import Ring, Scalar, ScalarParseError
from .series import PowerSeries, XPoly

USAGE_GRAMMAR = """\
Scalar grammar (numerators, series coefficients, parameters):
  expr   := term (("+" | "-") term)*
  term   := factor (("*" | "/") factor)*
  factor := ("+" | "-") factor | atom ("^" INT)?
  atom   := INT | NAME | "(" expr ")"
  NAME is a0, a1, ... (a_3 is accepted), q or u.

Series sources (pick one):
  --builtin NAME[(params)]   catalan, catalan-shifted, catalan-stretched(m,a),
                             motzkin, motzkin-u(u), eisenstein(q)
  --series "c0,c1,..."       explicit coefficients
  --b "-1,0,..."             index sequence (powers m_n = b_{n+1} - b_{n-1})
  --powers "m0,m1,..."       power sequence (may give an invalid index sequence)
  --family NAME [--m M]      identity, doubled, motzkin, wide-motzkin, stretched,
                             delayed, periodic-122, alternating-21, gapped
Numerators for --b/--powers/--family: --symbolic, --rule ones|eisenstein,
or --numerators "s0,s1,...".  Default: all ones.
"""


class InputError(Exception):
    pass


# -- serialization ------------------------------------------------------------


def encode(value):
    """Exact JSON form: integer constants as JSON ints, everything else as strings."""
    if isinstance(value, Scalar):
        if value.is_constant():
            c = value.constant()
            if isinstance(c, int):
                return c
        return str(value)
    if isinstance(value, XPoly):
        return {"poly": str(value), "coeffs": [encode(c) for c in value.coeffs]}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, dict):
        return {k: encode(v) for k, v in value.items()}
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    return value


def _text(value) -> str:
    if isinstance(value, (Scalar, XPoly)):
        return str(value)
    if isinstance(value, dict):
        return "  ".join(f"{k}={_text(v)}" for k, v in value.items())
    return str(value)


def emit(result, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(encode(result), separators=(",", ":")) + "\n")
        return
    rows = result if isinstance(result, list) else [result]
    if rows and all(isinstance(r, dict) for r in rows):
        keys = list(dict.fromkeys(k for r in rows for k in r))
        table = [keys] + [[_text(r.get(k, "")) for k in keys] for r in rows]
    else:
        table = [["n", "value"]] + [[str(i), _text(v)] for i, v in enumerate(rows)]
    widths = [max(len(row[j]) for row in table) for j in range(len(table[0]))]
    for row in table:
        out.write("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() + "\n")


# -- building a series from options ------------------------------------------


def _ints(text: str, what: str) -> list:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise InputError(f"{what}: expected comma-separated integers, got {text!r}") from None


def _param_value(text):
    if text is None:
        return None
    try:
        return Fraction(text)
    except ValueError:
        return text


@dataclass
class Source:
    """Everything needed to produce a series (and, if known, its index sequence)."""

    builtin: str | None = None
    series: list | None = None
    b: BSeq | None = None
    powers: list | None = None
    family: str | None = None
    m: int | None = None
    periodic: bool = False
    symbolic: bool = False
    rule: str | None = None
    numerators: list | None = None
    q: object = None
    u: object = None
    extra: dict = field(default_factory=dict)

    # powers as a rule n -> m_n together with a finite length (None if unbounded)
    def power_supply(self, levels_hint: int):
        if self.b is not None:
            self.b.require_valid()
            p = [self.b.at(n + 1) - self.b.at(n - 1) for n in range(self.b.K)]
            return p, len(p)
        if self.powers is not None:
            if self.periodic:
                p = self.powers
                return (lambda n: p[n % len(p)]), None
            return list(self.powers), len(self.powers)
        if self.family is not None:
            if self.family in catalog.BSEQ_FAMILIES:
                K = levels_hint + 2
                b = catalog.bseq_family(self.family, K, self.m)
                return [b.at(n + 1) - b.at(n - 1) for n in range(K)], None
            return catalog.power_family(self.family, levels_hint + 1, self.m), None
        return None, None

    def ring_for(self, depth: int) -> Ring:
        names = [f"a{j}" for j in range(depth + 1)] if (self.symbolic or self.numerators) else []
        for key, val in (("q", self.q), ("u", self.u)):
            if isinstance(val, str):
                names.append(val)
            elif val is None and (key == "q" and self.rule == "eisenstein"):
                names.append("q")
        if self.series:
            names += [f"a{j}" for j in range(depth + 1)]
        if self.series or self.numerators:
            names += ["q", "u"]
        return Ring(dict.fromkeys(names))

    def expand(self, order: int) -> PowerSeries:
        if self.builtin is not None:
            name, params = catalog.parse_builtin(self.builtin)
            return catalog.builtin_series(name, order, *params)
        if self.series is not None:
            ring = self.ring_for(len(self.series))
            try:
                vals = [ring.parse(t) if isinstance(t, str) else ring.const(t) for t in self.series]
            except ScalarParseError as exc:
                raise InputError(f"series: {exc}") from None
            if len(vals) <= order:
                raise InputError(f"series gives {len(vals)} coefficients, order {order} needs {order + 1}")
            return PowerSeries(ring, tuple(vals[: order + 1]))
        powers, length = self.power_supply(order)
        if powers is None:
            raise InputError("no series source given (use --builtin, --series, --b, --powers or --family)")
        depth = CFrac(powers, lambda n: 1).depth_for(order)
        ring = self.ring_for(depth)
        cf = CFrac(powers, self.numerator_supply(ring, depth), ring)
        return cfrac_expand(cf, order)

    def numerator_supply(self, ring: Ring, depth: int):
        if self.numerators is not None:
            try:
                vals = [ring.parse(t) if isinstance(t, str) else ring.const(t) for t in self.numerators]
            except ScalarParseError as exc:
                raise InputError(f"numerators: {exc}") from None
            if self.periodic:
                return lambda n: vals[n % len(vals)]
            return vals
        if self.symbolic:
            return ring.a
        rule = self.rule or "ones"
        if rule == "eisenstein":
            q = self.q if self.q is not None else "q"
            q = ring.gen(q) if isinstance(q, str) else ring.const(q)
            return catalog.numerator_rule("eisenstein", ring, q)
        return catalog.numerator_rule(rule, ring)

    def require_b(self) -> BSeq:
        if self.b is not None:
            return self.b.require_valid()
        if self.family in catalog.BSEQ_FAMILIES:
            return catalog.bseq_family(self.family, self.extra.get("K", 12), self.m)
        if self.powers is not None:
            b = powers_to_bseq(self.powers)
            if not b.is_valid:
                raise InputError(f"powers {self.powers} give an invalid index sequence: {'; '.join(b.violations())}")
            return b
        raise InputError("this command needs an index sequence (--b, --powers or a valid --family)")


def _source_from_args(ns) -> Source:
    src = Source(
        builtin=ns.builtin,
        series=[t.strip() for t in ns.series.split(",")] if ns.series else None,
        b=BSeq(tuple(_ints(ns.b, "--b"))) if ns.b else None,
        powers=_ints(ns.powers, "--powers") if ns.powers else None,
        family=ns.family,
        m=ns.m,
        periodic=ns.periodic,
        symbolic=ns.symbolic,
        rule=ns.rule,
        numerators=[t.strip() for t in ns.numerators.split(",")] if ns.numerators else None,
        q=_param_value(ns.q),
        u=_param_value(ns.u),
    )
    if src.b is not None and src.b.violations():
        raise InputError(f"--b {ns.b}: " + "; ".join(src.b.violations()))
    given = [x is not None for x in (src.builtin, src.series, src.b, src.powers, src.family)]
    if sum(given) > 1:
        raise InputError("give only one of --builtin, --series, --b, --powers, --family")
    return src


# -- commands -----------------------------------------------------------------


def cmd_expand(src: Source, ns):
    return list(src.expand(ns.order).coeffs)


def cmd_transform(src: Source, ns):
    s = src.expand(2 * ns.upto + ns.offset if ns.upto >= 0 else 0)
    return hankel.hankel_transform(s, ns.offset, ns.upto)


def cmd_closedform(src: Source, ns):
    if ns.name:
        n = ns.n if ns.n is not None else 0
        if ns.name.startswith("stretched"):
            scale = _param_value(ns.scale if ns.scale is not None else "a")
            if isinstance(scale, str):
                scale = Ring((scale,)).gen(scale)
            return closedform.family_formula(ns.name, n, m=ns.m, scale=scale)
        depth = 2 * n + 8
        nums = src.numerator_supply(src.ring_for(depth), depth)
        return closedform.family_formula(ns.name, n, numerators=nums, m=ns.m)
    b = src.require_b()
    if ns.k is not None:
        return str(closedform.buslaev_d(b, ns.k))
    upto = ns.upto if ns.upto is not None else b.at(b.K)
    return [str(v) for v in closedform.predicted_transform(b, upto)]


def cmd_polys(src: Source, ns):
    kind = ns.kind
    if kind == "fib":
        return [orthopoly.fibonacci_poly(n) for n in range(ns.n + 1)]
    if kind in ("p", "p-cross"):
        s = src.expand(max(2 * ns.n - 1, 0))
        fn = orthopoly.p_poly if kind == "p" else orthopoly.p_poly_cross
        return [fn(s, j) for j in range(ns.n + 1)]
    b = src.require_b()
    kmax = ns.n if ns.n is not None else b.K + 1
    ring = src.ring_for(b.K)
    nums = src.numerator_supply(ring, b.K)
    if kind == "r":
        return orthopoly.r_polys(b, nums, kmax)
    if kind == "convergents":
        out = []
        for k in range(kmax + 1):
            A, B = convergents(b, nums, k)
            out.append({"k": k, "A": A, "B": B})
        return out
    raise InputError(f"unknown polynomial kind {kind!r}")


def cmd_reconstruct(src: Source, ns):
    s = src.expand(2 * ns.upto + 2)
    try:
        return catalog.reconstruct_cfrac(s, ns.upto), 0
    except ZeroDeterminant as exc:
        report = {"ok": False, "n": exc.n, "offset": exc.offset, "partial": exc.partial, "message": str(exc)}
        return report, 3


# -- verify suites --------------------------------------------------------------


def _symbolic_b(src: Source):
    b = src.require_b()
    if not (src.numerators or src.rule):
        src.symbolic = True
    ring = src.ring_for(b.K)
    return b, ring, src.numerator_supply(ring, b.K)


def _series_for_b(b, nums, ring):
    cf = CFrac.from_bseq(b, nums, ring)
    return cfrac_expand(cf, cf.exact_order())


def suite_orthogonality(src, ns, rng):
    b, ring, nums = _symbolic_b(src)
    f = _series_for_b(b, nums, ring)
    L = orthopoly.MomentFunctional(f)
    kmax = min(ns.kmax, b.K)
    r = orthopoly.r_polys(b, nums, kmax)
    a = CFrac.from_bseq(b, nums, ring).numerator
    cases = []
    for k in range(kmax + 1):
        for n in range(b.at(k)):
            cases.append((f"k={k} n={n}", orthopoly.lambda_apply(L, r[k], n) == 0))
        norm = ring.one()
        for j in range(k):
            norm = norm * a(j)
        cases.append((f"k={k} n=b_k", orthopoly.lambda_apply(L, r[k], b.at(k)) == norm))
    return cases


def suite_reversal(src, ns, rng):
    b, ring, nums = _symbolic_b(src)
    kmax = min(ns.kmax, b.K + 1)
    r = orthopoly.r_polys(b, nums, kmax)
    return [
        (f"k={k}", convergents(b, nums, k)[1].reverse(b.at(k - 1) + 1) == r[k])
        for k in range(kmax + 1)
    ]


def suite_tail(src, ns, rng):
    b, ring, nums = _symbolic_b(src)
    f = _series_for_b(b, nums, ring)
    a = CFrac.from_bseq(b, nums, ring).numerator
    cases = []
    for k in range(min(ns.kmax, b.K) + 1):
        A, B = convergents(b, nums, k)
        top = b.at(k - 1) + b.at(k) + 1
        fx = XPoly(ring, f.coeffs[: top + 1])
        diff = B * fx - A
        norm = ring.one()
        for j in range(k):
            norm = norm * a(j)
        ok = all(not diff.coeff(n) for n in range(top)) and diff.coeff(top) == norm
        cases.append((f"k={k}", ok))
    return cases


def _corpus(ns, rng):
    if ns.b:
        return [BSeq(tuple(_ints(ns.b, "--b"))).require_valid()]
    return [closedform.random_bseq(rng, ns.bmax, 2 * ns.upto) for _ in range(ns.cases)]


def suite_buslaev(src, ns, rng):
    cases = []
    for b in _corpus(ns, rng):
        ring = Ring.standard(b.K)
        cf = CFrac.from_bseq(b, ring.a, ring)
        N = min(ns.upto, cf.exact_order() // 2)
        got = hankel.hankel_transform(cfrac_expand(cf, 2 * N), 0, N)
        want = [m.to_scalar(ring) for m in closedform.predicted_transform(b, N)]
        cases.append((f"b={b} N={N}", got == want))
    return cases


def suite_signs(src, ns, rng):
    cases = []
    for b in _corpus(ns, rng):
        signs = [rng.choice((1, -1)) for _ in range(b.K)]
        cf = CFrac.from_bseq(b, signs)
        N = min(ns.upto, cf.exact_order() // 2)
        got = hankel.hankel_transform(cfrac_expand(cf, 2 * N), 0, N)
        cases.append((f"b={b} a={signs}", all(v in (0, 1, -1) for v in got)))
    return cases


def _random_unit_series(rng, order):
    return PowerSeries.from_values([1] + [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(order)])


def suite_reductions(src, ns, rng):
    cases = []
    for i in range(ns.cases):
        n = rng.randint(1, 4)
        m = rng.randint(0, 3)
        s = _random_unit_series(rng, 2 * n + 2 * m + 4)
        for name, kw in (
            ("andrews-wimp", {"n": n}),
            ("negative-shift", {"n": n, "m": m}),
            ("unit-shift", {"n": n}),
            ("negative-offset", {"n": min(n, m), "m": m}),
        ):
            rep = hankel.verify_reduction(s, name, **kw)
            cases.append((f"#{i} {name} {kw}", rep.holds))
    return cases


def suite_condensation(src, ns, rng):
    cases = []
    names = ["catalan", "catalan-shifted", "catalan-stretched(3,2)", "motzkin", "motzkin-u(3)", "eisenstein(2)"]
    for entry in names:
        name, params = catalog.parse_builtin(entry)
        s = catalog.builtin_series(name, 2 * ns.upto + 4, *params)
        for n in range(ns.upto + 1):
            cases.append((f"{entry} n={n}", hankel.condensation_check(s, n).holds))
    return cases


def suite_p_relations(src, ns, rng):
    b, ring, nums = _symbolic_b(src)
    upto = ns.upto if ns.upto is not None else b.at(b.K)
    upto = min(upto, b.at(b.K), (b.at(b.K) + b.at(b.K - 1) + 2) // 2)
    return [(f"m={rel.m} {rel.kind}", rel.holds) for rel in orthopoly.p_relations(b, nums, upto)]


def suite_step(src, ns, rng):
    b, ring, nums = _symbolic_b(src)
    cases = []
    for k in range(b.K):
        for n in range(ns.kmax + 1):
            try:
                rep = closedform.step_recursion_check(b, nums, k, n)
            except InsufficientDepth:
                break
            cases.append((f"k={k} n={n}", rep.holds))
    return cases


SUITES = {
    "orthogonality": suite_orthogonality,
    "reversal": suite_reversal,
    "tail": suite_tail,
    "buslaev": suite_buslaev,
    "signs": suite_signs,
    "reductions": suite_reductions,
    "condensation": suite_condensation,
    "p-relations": suite_p_relations,
    "step": suite_step,
}


def cmd_verify(src: Source, ns):
    rng = random.Random(ns.seed)
    cases = SUITES[ns.suite](src, ns, rng)
    failed = [label for label, ok in cases if not ok]
    report = {"suite": ns.suite, "passed": len(cases) - len(failed), "failed": len(failed), "failures": failed}
    return report, (3 if failed else 0)


# -- job files ------------------------------------------------------------------


JOB_KEYS = {"powers", "b", "numerators", "symbolic", "order", "tasks", "periodic", "q", "u", "rule"}
JOB_TASKS = {"expand", "transform", "closedform", "polys", "reconstruct"}


def load_job(path: str) -> dict:
    """Read and validate a job file; problems are reported with ``$.key[i]`` locations."""
    try:
        with open(path) as fh:
            job = json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return validate_job(job)


def validate_job(job) -> dict:
    if not isinstance(job, dict):
        raise InputError("$: expected an object")
    unknown = sorted(set(job) - JOB_KEYS)
    if unknown:
        raise InputError(f"$.{unknown[0]}: unknown key (allowed: {', '.join(sorted(JOB_KEYS))})")
    if ("powers" in job) == ("b" in job):
        raise InputError("$: exactly one of 'powers' or 'b' is required")
    key = "powers" if "powers" in job else "b"
    seq = job[key]
    if not isinstance(seq, list) or not seq:
        raise InputError(f"$.{key}: expected a non-empty list of integers")
    for i, v in enumerate(seq):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InputError(f"$.{key}[{i}]: expected an integer, got {json.dumps(v)}")
        if key == "powers" and v < 1:
            raise InputError(f"$.powers[{i}]: powers must be >= 1, got {v}")
    if key == "b":
        b = BSeq(tuple(seq)) if len(seq) >= 2 else None
        if b is None:
            raise InputError("$.b: need at least b_-1 and b_0")
        if seq[0] != -1:
            raise InputError(f"$.b[0]: b_-1 must be -1, got {seq[0]}")
        if seq[1] != 0:
            raise InputError(f"$.b[1]: b_0 must be 0, got {seq[1]}")
        problems = b.violations()
        if problems:
            raise InputError(f"$.b: {problems[0]}")
    if "numerators" in job and job.get("symbolic"):
        raise InputError("$.symbolic: give either 'numerators' or 'symbolic', not both")
    if "numerators" in job:
        nums = job["numerators"]
        if not isinstance(nums, list):
            raise InputError("$.numerators: expected a list of scalar strings")
        for i, v in enumerate(nums):
            if not isinstance(v, (str, int)) or isinstance(v, bool):
                raise InputError(f"$.numerators[{i}]: expected a scalar string, got {json.dumps(v)}")
            if isinstance(v, str):
                try:
                    Ring.standard(len(nums) + 1, q=True, u=True).parse(v)
                except ScalarParseError as exc:
                    raise InputError(f"$.numerators[{i}]: {exc}") from None
    if "symbolic" in job and not isinstance(job["symbolic"], bool):
        raise InputError("$.symbolic: expected true or false")
    if "order" not in job:
        raise InputError("$.order: required")
    if not isinstance(job["order"], int) or isinstance(job["order"], bool) or job["order"] < 0:
        raise InputError(f"$.order: expected a non-negative integer, got {json.dumps(job['order'])}")
    tasks = job.get("tasks")
    if not isinstance(tasks, list) or not tasks:
        raise InputError("$.tasks: expected a non-empty list")
    for i, t in enumerate(tasks):
        name = t if isinstance(t, str) else (t.get("task") if isinstance(t, dict) else None)
        if name not in JOB_TASKS:
            raise InputError(f"$.tasks[{i}]: unknown task {json.dumps(name)} (allowed: {', '.join(sorted(JOB_TASKS))})")
    return job


def run_job(job: dict, fmt: str) -> int:
    src = Source(
        b=BSeq(tuple(job["b"])) if "b" in job else None,
        powers=job.get("powers"),
        periodic=bool(job.get("periodic", False)),
        symbolic=bool(job.get("symbolic", False)),
        numerators=[str(v) for v in job["numerators"]] if "numerators" in job else None,
        rule=job.get("rule"),
        q=_param_value(job.get("q")),
        u=_param_value(job.get("u")),
    )
    order = job["order"]
    results, code = [], 0
    for t in job["tasks"]:
        entry = {"task": t} if isinstance(t, str) else dict(t)
        name = entry["task"]
        if name == "expand":
            value = cmd_expand(src, argparse.Namespace(order=entry.get("order", order)))
        elif name == "transform":
            offset = entry.get("offset", 0)
            upto = entry.get("upto", (order - offset) // 2)
            value = cmd_transform(src, argparse.Namespace(offset=offset, upto=upto))
        elif name == "closedform":
            value = cmd_closedform(src, argparse.Namespace(name=None, k=entry.get("k"), upto=entry.get("upto")))
        elif name == "polys":
            value = cmd_polys(src, argparse.Namespace(kind=entry.get("kind", "r"), n=entry.get("n")))
        else:
            value, c = cmd_reconstruct(src, argparse.Namespace(upto=entry.get("upto", (order - 2) // 2)))
            code = max(code, c)
        results.append({"task": name, "result": value})
    if fmt == "json":
        emit(results, "json")
    else:
        for r in results:
            sys.stdout.write(f"# {r['task']}\n")
            emit(r["result"], "table")
    return code


# -- argument parsing -------------------------------------------------------------


def _source_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("series source")
    g.add_argument("--builtin", metavar="NAME[(params)]")
    g.add_argument("--series", metavar="C0,C1,...")
    g.add_argument("--b", metavar="-1,0,...")
    g.add_argument("--powers", metavar="M0,M1,...")
    g.add_argument("--family", metavar="NAME")
    g.add_argument("--m", type=int, help="family parameter")
    g.add_argument("--periodic", action="store_true", help="repeat --powers/--numerators cyclically")
    n = p.add_argument_group("numerators")
    n.add_argument("--symbolic", action="store_true", help="declare a0..aD as indeterminates")
    n.add_argument("--rule", choices=["ones", "eisenstein"])
    n.add_argument("--numerators", metavar="S0,S1,...")
    n.add_argument("--q", metavar="VALUE|NAME", help="q parameter (a name makes it symbolic)")
    n.add_argument("--u", metavar="VALUE|NAME", help="u parameter (a name makes it symbolic)")
    p.add_argument("--format", choices=["json", "table"], default="json")
    return p


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n\n{USAGE_GRAMMAR}")
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    common = _source_parser()
    parser = _Parser(
        prog="hankelfrac",
        description="Exact Hankel determinants of C-fractions.",
        epilog=USAGE_GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--job", metavar="PATH", help="run the tasks of a JSON job file")
    parser.add_argument("--format", choices=["json", "table"], default="json", dest="top_format")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("expand", parents=[common], help="power-series coefficients")
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("transform", parents=[common], help="Hankel transform d(0..N) at an offset")
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--offset", type=int, default=0)

    p = sub.add_parser("closedform", parents=[common], help="closed-form determinant values")
    p.add_argument("--k", type=int, help="single value d(b_k)")
    p.add_argument("--upto", type=int, help="predicted transform d(0..N)")
    p.add_argument("--name", choices=sorted(closedform.FAMILIES), help="special family formula")
    p.add_argument("--n", type=int, help="index for --name")
    p.add_argument("--scale", help="common numerator for the stretched Catalan families")

    p = sub.add_parser("polys", parents=[common], help="r_k, p_n, convergents or Fibonacci polynomials")
    p.add_argument("--kind", choices=["r", "p", "p-cross", "convergents", "fib"], default="r")
    p.add_argument("--n", type=int, help="highest index")

    p = sub.add_parser("reconstruct", parents=[common], help="recover numerators of an all-ones-power fraction")
    p.add_argument("--upto", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--upto", type=int, default=8)
    p.add_argument("--cases", type=int, default=20)
    p.add_argument("--bmax", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    return parser


COMMANDS = {
    "expand": cmd_expand,
    "transform": cmd_transform,
    "closedform": cmd_closedform,
    "polys": cmd_polys,
    "reconstruct": cmd_reconstruct,
    "verify": cmd_verify,
}


def _glue_negative_values(argv: list) -> list:
    # "--b -1,0,1" would otherwise read "-1,0,1" as an option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and re.match(r"-\d", argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    ns = parser.parse_args(_glue_negative_values(argv))
    try:
        if ns.job:
            if ns.command:
                raise InputError("--job runs its own tasks; do not combine it with a subcommand")
            return run_job(load_job(ns.job), ns.top_format)
        if not ns.command:
            parser.error("a subcommand or --job is required")
        src = _source_from_args(ns)
        out = COMMANDS[ns.command](src, ns)
        code = 0
        if isinstance(out, tuple):
            out, code = out
        if isinstance(out, str):
            sys.stdout.write(out + "\n")
        else:
            emit(out, ns.format)
        return code
    except (InputError, ValueError, KeyError, IndexError, ArithmeticError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        sys.stderr.write(f"hankelfrac: error: {msg}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
