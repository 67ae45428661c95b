"""Command line: ``opsplit check | construct | double | demo``.

Exit codes: 0 every check passed, 1 some check failed, 2 bad input.

Representation families (``--left``, ``--right``, ``--alpha``, ``--beta``)
are stored as multiplications on the algebra's own space: the family ``f``
stored under a name satisfies ``f(e_i) e_j = Σ_k t[i, j, k] e_k``.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import linalg as la
from .averaging import (
    AveragingLieAlgebra,
    check_admissible,
    check_averaging,
    endo_double,
    induced_leibniz,
    sdpl_from_admissible,
)
from .bialgebra import (
    AvgLieBialgebra,
    avg_lie_bialgebra_via_double,
    avg_manin_to_leibniz_manin,
    build_leibniz_double,
    build_sdpl_double,
    check_avg_lie_bialgebra,
    check_leibniz_coalgebra,
    check_manin_triple,
    check_sdpl_bialgebra,
    check_sdpl_coalgebra,
    dualize_comult,
    induce_sdpl_bialgebra,
    lie_double,
    pairing_form,
)
from .core import (
    IDENTITY,
    PRESETS,
    Rep,
    TypeMatrix,
    Violation,
    check_relations,
    is_representation,
    left_mults,
)
from .errors import OpsplitError, ParseError
from .fileformat import AlgebraFile, format_rational, load, serialize
from .leibniz import ROUTES, check_sdpl, check_type_a, sdpl_from_form
from .splitting import (
    SplitAlgebra,
    check_o_operator,
    check_strong,
    check_type_m_invariance,
    check_type_m_pre,
    check_type_m_rota_baxter,
    classify_o_operator,
    induce_splitting,
    splitting_from_form,
)

CHECK_KINDS = (
    "relations", "rep", "type-m-pre", "o-operator", "rota-baxter", "invariance", "sdpl",
    "averaging", "admissible", "coalgebra", "bialgebra", "manin", "avg-bialgebra",
)
CONSTRUCT_KINDS = (
    "split-from-form", "split-from-operator", "sdpl-from-admissible",
    "induce-bialgebra", "endo-double", "leibniz-from-averaging",
)
DOUBLE_KINDS = ("leibniz", "sdpl", "lie", "avg")


class InputError(OpsplitError):
    pass


# ---------------------------------------------------------------------------
# reports


@dataclass
class CheckReport:
    verdicts: dict
    violations: tuple = ()
    total: int = 0
    elapsed: float = None
    notes: tuple = field(default=())

    @property
    def ok(self):
        return all(self.verdicts.values())


def _violation_key(v):
    return (str(v.relation), tuple(v.triple))


def emit_report(r, fmt="text", timing=True):
    """Stable rendering: verdicts and violations sorted, rationals as ``p/q``."""
    violations = sorted(r.violations, key=_violation_key)
    if fmt == "json":
        data = {
            "ok": r.ok,
            "verdicts": {k: bool(r.verdicts[k]) for k in sorted(r.verdicts)},
            "violations": [
                {
                    "relation": v.relation if isinstance(v.relation, int) else str(v.relation),
                    "triple": list(v.triple),
                    "residual": [format_rational(x) for x in v.residual],
                }
                for v in violations
            ],
            "total": r.total,
        }
        if r.notes:
            data["notes"] = list(r.notes)
        if timing and r.elapsed is not None:
            data["time"] = round(r.elapsed, 6)
        return json.dumps(data, indent=2) + "\n"
    lines = ["OK" if r.ok else "FAIL"]
    if not r.ok:
        lines += [f"failed: {k}" for k in sorted(r.verdicts) if not r.verdicts[k]]
        for v in violations:
            triple = "(" + ", ".join(map(str, v.triple)) + ")"
            residual = "[" + ", ".join(format_rational(x) for x in v.residual) + "]"
            lines.append(f"violation {v.relation} {triple} {residual}")
        if r.total > len(violations):
            lines.append(f"... {r.total - len(violations)} more violations")
    lines += list(r.notes)
    if timing and r.elapsed is not None:
        lines.append(f"time: {r.elapsed:.3f}s")
    return "\n".join(lines) + "\n"


def parse_report(text):
    """Inverse of the JSON rendering of :func:`emit_report`."""
    data = json.loads(text)
    violations = tuple(
        Violation(v["relation"], tuple(v["triple"]), tuple(la.Q(x) for x in v["residual"]))
        for v in data["violations"]
    )
    return CheckReport(dict(data["verdicts"]), violations, data["total"], data.get("time"), tuple(data.get("notes", ())))


def _from_violation_report(name, vr):
    return CheckReport({name: vr.ok}, vr.violations, vr.total)


# ---------------------------------------------------------------------------
# reading named structures out of a file


def resolve_path(path):
    """``path`` itself, or the bundled data file of that name when ``path`` does not exist."""
    import os

    from .catalog import data_path

    if os.path.exists(path) or os.path.dirname(path):
        return path
    bundled = data_path(path)
    return str(bundled) if bundled.is_file() else path


def _named(block, name, what):
    if name not in block:
        raise InputError(f"no {what} named {name!r}; available: {sorted(block)}")
    return block[name]


def _mult(af, args):
    if args.mult is None:
        if len(af.mults) != 1:
            raise InputError(f"several multiplications {sorted(af.mults)}; choose one with --mult")
        return next(iter(af.mults.values()))
    return _named(af.mults, args.mult, "multiplication")


def _split(af, args):
    return SplitAlgebra(_named(af.mults, args.succ, "multiplication"), _named(af.mults, args.prec, "multiplication"))


def _family(af, name):
    return left_mults(_named(af.mults, name, "family"))


def _type_matrix(args):
    if args.M is None:
        return IDENTITY
    try:
        entries = [la.Q(x) for x in args.M.split(",")]
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"--M: {e}") from None
    if len(entries) != 4:
        raise InputError("--M takes a1,b1,a2,b2")
    return TypeMatrix(*entries)


def _preset(args):
    return PRESETS[args.preset]


def _avg_bialgebra(af, args):
    c = _mult(af, args)
    delta = _named(af.comults, args.comult, "comultiplication") if args.comult in af.comults else la.zeros(*c.shape)
    return AvgLieBialgebra(c, delta, _named(af.maps, args.P, "map"), _named(af.maps, args.Q, "map"))


def _dual_split(af, args):
    return SplitAlgebra(
        dualize_comult(_named(af.comults, args.vartheta, "comultiplication")),
        dualize_comult(_named(af.comults, args.theta, "comultiplication")),
    )


# ---------------------------------------------------------------------------
# check


def run_check(af, args):
    kind, cap = args.kind, args.cap
    if kind == "relations":
        return _from_violation_report("relations", check_relations(_mult(af, args), _preset(args), cap=cap))
    if kind == "rep":
        rep = Rep(_family(af, args.left), _family(af, args.right))
        return _from_violation_report("representation", is_representation(_mult(af, args), _preset(args), rep, cap=cap))
    if kind == "type-m-pre":
        vr = check_type_m_pre(_split(af, args), _preset(args), _type_matrix(args), dual=args.dual, cap=cap)
        return _from_violation_report("dual-type-m-pre" if args.dual else "type-m-pre", vr)
    if kind == "o-operator":
        c, T = _mult(af, args), _named(af.maps, args.map or "T", "map")
        alpha, beta = _family(af, args.alpha), _family(af, args.beta)
        verdicts = {"o-operator": check_o_operator(c, alpha, beta, T)}
        if verdicts["o-operator"]:
            M = _type_matrix(args)
            label = "dual-type-m" if args.dual else "type-m"
            verdicts[label] = classify_o_operator(c, _preset(args), alpha, beta, T, M, dual=args.dual)
            if args.strong:
                verdicts["strong"] = check_strong(c, _preset(args), alpha, beta, T)
        return CheckReport(verdicts)
    if kind == "rota-baxter":
        R = _named(af.maps, args.map or "R", "map")
        return CheckReport(
            {"rota-baxter": check_type_m_rota_baxter(_mult(af, args), R, _type_matrix(args), args.strong, _preset(args))}
        )
    if kind == "invariance":
        B = _named(af.forms, args.form, "form")
        return CheckReport({"invariance": check_type_m_invariance(_mult(af, args), B, _type_matrix(args))})
    if kind == "sdpl":
        s = _split(af, args)
        verdicts = {"sdpl": check_sdpl(s)}
        verdicts.update({f"type-a:{route}": check_type_a(s, route) for route in ROUTES})
        return CheckReport(verdicts)
    if kind == "averaging":
        return CheckReport({"averaging": check_averaging(_mult(af, args), _named(af.maps, args.P, "map"))})
    if kind == "admissible":
        P, Q = _named(af.maps, args.P, "map"), _named(af.maps, args.Q, "map")
        return CheckReport({"admissible": check_admissible(_mult(af, args), P, Q)})
    if kind == "coalgebra":
        if args.vartheta in af.comults and args.theta in af.comults:
            vt, th = af.comults[args.vartheta], af.comults[args.theta]
            return CheckReport({"sdpl-coalgebra": check_sdpl_coalgebra(vt, th)})
        return CheckReport({"leibniz-coalgebra": check_leibniz_coalgebra(_named(af.comults, args.comult, "comultiplication"))})
    if kind == "bialgebra":
        s = _split(af, args)
        vt = _named(af.comults, args.vartheta, "comultiplication")
        th = _named(af.comults, args.theta, "comultiplication")
        double = build_leibniz_double(s, _dual_split(af, args))
        return CheckReport(
            {"sdpl-bialgebra": check_sdpl_bialgebra(s, vt, th), "leibniz-double": check_relations(double, PRESETS["leibniz"]).ok}
        )
    if kind == "manin":
        if args.manin_kind == "sdplQuadratic":
            return CheckReport({"manin:sdplQuadratic": check_manin_triple(_split(af, args), "sdplQuadratic")})
        return CheckReport({"manin:leibnizLeftInv": check_manin_triple(_mult(af, args), "leibnizLeftInv")})
    if kind == "avg-bialgebra":
        b = _avg_bialgebra(af, args)
        return CheckReport({"avg-lie-bialgebra": check_avg_lie_bialgebra(b), "via-double": avg_lie_bialgebra_via_double(b)})
    raise InputError(f"unknown check kind {kind!r}")


# ---------------------------------------------------------------------------
# construct and double


def _with(af, dim=None, basis=None, **sections):
    out = AlgebraFile(af.dim if dim is None else dim, af.basis if dim is None else basis)
    if dim is None:
        out.mults, out.forms, out.maps, out.comults = dict(af.mults), dict(af.forms), dict(af.maps), dict(af.comults)
    for name, block in sections.items():
        getattr(out, name).update(block)
    return out


def _double_basis(af):
    labels = af.labels()
    return tuple(labels) + tuple(f"{x}*" for x in labels)


def run_construct(af, args):
    kind = args.kind
    if kind == "split-from-form":
        c, B = _mult(af, args), _named(af.forms, args.form, "form")
        s = sdpl_from_form(c, B) if args.M is None else splitting_from_form(c, _preset(args), B, _type_matrix(args))
        return _with(af, mults={args.succ: s.succ, args.prec: s.prec})
    if kind == "split-from-operator":
        c, T = _mult(af, args), _named(af.maps, args.map or "T", "map")
        s = induce_splitting(c, _family(af, args.alpha), _family(af, args.beta), T)
        return _with(af, mults={args.succ: s.succ, args.prec: s.prec})
    if kind == "sdpl-from-admissible":
        c = _mult(af, args)
        s = sdpl_from_admissible(AveragingLieAlgebra(c, _named(af.maps, args.P, "map"), _named(af.maps, args.Q, "map")))
        return _with(af, mults={args.succ: s.succ, args.prec: s.prec})
    if kind == "induce-bialgebra":
        bi = induce_sdpl_bialgebra(_avg_bialgebra(af, args))
        return _with(
            af,
            mults={args.succ: bi.sdpl.succ, args.prec: bi.sdpl.prec},
            comults={args.vartheta: bi.vartheta, args.theta: bi.theta},
        )
    if kind == "endo-double":
        al = endo_double(_mult(af, args))
        return _with(af, dim=al.dim, basis=al.labels, mults={"bracket": al.bracket}, maps={"P": al.P, "Q": al.Q})
    if kind == "leibniz-from-averaging":
        c = _mult(af, args)
        P = _named(af.maps, args.P, "map")
        if not check_averaging(c, P):
            raise InputError("P is not an averaging operator")
        return _with(af, mults={"circ": induced_leibniz(AveragingLieAlgebra(c, P))})
    raise InputError(f"unknown construct kind {kind!r}")


def run_double(af, args):
    kind, n = args.kind, af.dim
    basis = _double_basis(af)
    form = {"B": pairing_form(n)}
    if kind == "leibniz":
        circ = build_leibniz_double(_split(af, args), _dual_split(af, args))
        return _with(af, dim=2 * n, basis=basis, mults={"circ": circ}, forms=form)
    if kind == "sdpl":
        d = build_sdpl_double(_split(af, args), _dual_split(af, args))
        return _with(af, dim=2 * n, basis=basis, mults={"succ": d.succ, "prec": d.prec}, forms=form)
    if kind == "lie":
        delta = _named(af.comults, args.comult, "comultiplication")
        D = lie_double(_mult(af, args), dualize_comult(delta))
        return _with(af, dim=2 * n, basis=basis, mults={"bracket": D}, forms=form)
    if kind == "avg":
        b = _avg_bialgebra(af, args)
        circ, split = avg_manin_to_leibniz_manin(b)
        D = lie_double(b.bracket, dualize_comult(b.delta))
        PQ, QP = la.zeros(2 * n, 2 * n), la.zeros(2 * n, 2 * n)
        PQ[:n, :n], PQ[n:, n:] = b.P, b.Q.T
        QP[:n, :n], QP[n:, n:] = b.Q, b.P.T
        return _with(
            af, dim=2 * n, basis=basis,
            mults={"bracket": D, "circ": circ, "succ": split.succ, "prec": split.prec},
            maps={"P": PQ, "Q": QP}, forms=form,
        )
    raise InputError(f"unknown double kind {kind!r}")


# ---------------------------------------------------------------------------
# demo


def run_demo(name):
    from .demo import sl2_pipeline

    if name != "sl2":
        raise InputError(f"unknown demo {name!r}")
    verdicts, diffs = sl2_pipeline()
    return CheckReport(verdicts, tuple(diffs), len(diffs))


# ---------------------------------------------------------------------------
# argument parsing


def _add_names(p):
    p.add_argument("--mult", help="multiplication to check (default: the only one)")
    p.add_argument("--succ", default="succ")
    p.add_argument("--prec", default="prec")
    p.add_argument("--left", default="left")
    p.add_argument("--right", default="right")
    p.add_argument("--alpha", default="alpha")
    p.add_argument("--beta", default="beta")
    p.add_argument("--map", help="operator name (default T for O-operators, R for Rota-Baxter)")
    p.add_argument("--P", default="P")
    p.add_argument("--Q", default="Q")
    p.add_argument("--form", default="B")
    p.add_argument("--comult", default="delta")
    p.add_argument("--vartheta", default="vartheta")
    p.add_argument("--theta", default="theta")
    p.add_argument("--preset", choices=sorted(PRESETS), default="leibniz")
    p.add_argument("--M", help="type matrix as a1,b1,a2,b2 (default identity)")


def build_parser():
    parser = argparse.ArgumentParser(prog="opsplit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="verify a structure stored in an algebra file")
    check.add_argument("--kind", choices=CHECK_KINDS, required=True)
    check.add_argument("--dual", action="store_true")
    check.add_argument("--strong", action="store_true")
    check.add_argument("--manin-kind", choices=("leibnizLeftInv", "sdplQuadratic"), default="leibnizLeftInv")
    check.add_argument("--cap", type=int, help="maximum violations listed (default OPSPLIT_VIOLATION_CAP or 100)")
    _add_names(check)

    construct = sub.add_parser("construct", help="build a new structure and write an algebra file")
    construct.add_argument("--kind", choices=CONSTRUCT_KINDS, required=True)
    _add_names(construct)

    double = sub.add_parser("double", help="build a double on A ⊕ A* and write an algebra file")
    double.add_argument("--kind", choices=DOUBLE_KINDS, required=True)
    _add_names(double)

    for p in (construct, double):
        p.add_argument("--out", "-o", help="output path (default: stdout)")
        p.add_argument("file")

    check.add_argument("file")
    demo = sub.add_parser("demo", help="run a bundled worked example against its golden tables")
    demo.add_argument("name", choices=("sl2",))
    for p in (check, demo):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--no-timing", action="store_true", help="omit timing for byte-stable output")
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    start = time.perf_counter()
    try:
        if args.command == "demo":
            report = run_demo(args.name)
        else:
            af = load(resolve_path(args.file))
            if args.command == "check":
                report = run_check(af, args)
            else:
                runner = run_construct if args.command == "construct" else run_double
                text = serialize(runner(af, args))
                if args.out:
                    with open(args.out, "w", encoding="utf-8") as fh:
                        fh.write(text)
                else:
                    stdout.write(text)
                return 0
    except ParseError as e:
        print(f"error: parse: {e}", file=stderr)
        return 2
    except (OpsplitError, OSError, KeyError) as e:
        print(f"error: {type(e).__name__}: {e}", file=stderr)
        return 2
    report.elapsed = time.perf_counter() - start
    stdout.write(emit_report(report, args.format, timing=not args.no_timing))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
