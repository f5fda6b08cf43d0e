"""Command-line surface: analyze, groebner, delta, reproduce, fuzz.

Every command is deterministic given its inputs and seed.  Exit codes:
0 success, 1 verification mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .catalog import (
    GOLDEN_DELTA,
    chain_antichain_pair,
    counterexample_cubic,
    counterexample_pair,
    random_pair,
)
from .ehrhart import (
    EhrhartError,
    check_fano,
    check_normal,
    check_reflexive,
    delta_vector,
    ehrhart_counts,
    is_symmetric_unimodal,
)
from .geometry import (
    GeometryError,
    build_omega,
    origin_in_interior,
    polytope_from_configuration,
)
from .groebner import (
    GroebnerError,
    buchberger,
    default_order,
    is_groebner,
    ideal_equality,
    make_order,
    max_degree,
    random_ranking,
    toric_ideal_generators,
    verify_theorem2,
)
from .posets import (
    PosetError,
    common_linear_extension,
    enumerate_ideals,
    parse_poset,
    relabel_by_extension,
    union_cycle,
)
from .toric import (
    ToricError,
    binomial_text,
    build_variables,
    family_G,
    quadratic_kernel_binomials,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2


@dataclass
class RunConfig:
    command: str
    poset_p: str = None
    poset_q: str = None
    order_spec: str = "default"
    seed: int = 0
    trials: int = 25
    t_max: int = 0
    fmt: str = "text"
    dmax: int = 6


def _load_posets(cfg):
    with open(cfg.poset_p) as fh:
        p = parse_poset(fh.read())
    with open(cfg.poset_q) as fh:
        q = parse_poset(fh.read())
    if p.d != q.d:
        raise PosetError(f"element counts differ: {p.d} vs {q.d}")
    return p, q


def _resolve_order(vs, spec):
    if spec == "default":
        return default_order(vs)
    with open(spec) as fh:
        lines = [
            ln.strip()
            for ln in fh
            if ln.strip() and not ln.strip().startswith("#")
        ]
    by_name = {name: i for i, name in enumerate(vs.names())}
    ranking = []
    for name in lines:
        if name not in by_name:
            raise GroebnerError(f"unknown variable in order file: {name}")
        ranking.append(by_name[name])
    return make_order(vs, ranking)


def _emit(report, cfg, text_lines):
    if cfg.fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_analyze(cfg):
    p, q = _load_posets(cfg)
    ext = common_linear_extension(p, q)
    cycle = union_cycle(p, q)
    omega = build_omega(p, q)
    cert = origin_in_interior(omega)
    agree = (ext is not None) == (cert is not None)
    report = {
        "command": "analyze",
        "d": p.d,
        "poset_p": p.to_text(),
        "poset_q": q.to_text(),
        "ideal_count_p": len(enumerate_ideals(p)),
        "ideal_count_q": len(enumerate_ideals(q)),
        "omega_size": len(omega.points),
        "common_extension": [i + 1 for i in ext] if ext else None,
        # relabeling the pair along the witness makes it the identity; both
        # labelings are reported since either can be the useful one
        "relabeled_p": relabel_by_extension(p, ext).to_text() if ext else None,
        "relabeled_q": relabel_by_extension(q, ext).to_text() if ext else None,
        "union_cycle": cycle,
        "origin_interior": cert is not None,
        "interior_certificate": (
            [
                {"point": list(pt), "weight": str(w)}
                for pt, w in zip(cert.points, cert.weights)
            ]
            if cert
            else None
        ),
        "verdicts_agree": agree,
    }
    lines = [
        f"d = {p.d}",
        f"P: {p.to_text()}   ideals: {report['ideal_count_p']}",
        f"Q: {q.to_text()}   ideals: {report['ideal_count_q']}",
        f"|Omega| = {report['omega_size']}",
        (
            "common extension: "
            + (" ".join(str(i + 1) for i in ext) if ext else f"none ({cycle})")
        ),
        "origin interior: " + ("yes (certificate attached)" if cert else "no"),
    ]
    if ext:
        lines.insert(
            5,
            "relabeled along witness: P' = %r   Q' = %r"
            % (report["relabeled_p"], report["relabeled_q"]),
        )
    if not agree:
        lines.append("BUG: extension and interior verdicts disagree")
    _emit(report, cfg, lines)
    return EXIT_OK if agree else EXIT_VERIFY


def cmd_groebner(cfg):
    p, q = _load_posets(cfg)
    vs, fam = family_G(p, q)
    order = _resolve_order(vs, cfg.order_spec)
    gens = toric_ideal_generators(vs, order)
    gb = buchberger(gens, order)
    degree = max_degree(gb)
    ext = common_linear_extension(p, q)
    bundle = (
        verify_theorem2(p, q, order, toric_gens=gens) if ext is not None else None
    )
    report = {
        "command": "groebner",
        "d": p.d,
        "variables": list(vs.names()),
        "family_size": len(fam),
        "family": [binomial_text(vs, b) for b in fam],
        "reduced_gb_size": len(gb),
        "reduced_gb": [binomial_text(vs, b) for b in gb],
        "max_degree": degree,
        "quadratic": degree <= 2,
        "theorem_bundle": bundle.to_json_dict() if bundle else None,
        "note": (
            None
            if ext is not None
            else "no common linear extension: a quadratic basis is not promised"
        ),
    }
    lines = [
        f"variables: {len(vs)}",
        f"family size: {len(fam)}",
        f"reduced Groebner basis ({len(gb)} elements, max degree {degree}):",
    ]
    lines += ["  " + binomial_text(vs, b) for b in gb]
    if bundle:
        lines.append(
            "quadratic-basis checks: "
            + ("all pass" if bundle.passed else "FAILED")
        )
    elif report["note"]:
        lines.append(report["note"])
    _emit(report, cfg, lines)
    if bundle is not None and not bundle.passed:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_delta(cfg):
    p, q = _load_posets(cfg)
    d = p.d
    if d > cfg.dmax:
        raise PosetError(
            f"d = {d} exceeds the cap {cfg.dmax}; raise --dmax to override"
        )
    if d > 6:
        print(
            f"warning: d = {d} above the supported table range; "
            "counting may be slow",
            file=sys.stderr,
        )
    t_norm = cfg.t_max if cfg.t_max else d + 1
    omega = build_omega(p, q)
    poly = polytope_from_configuration(omega)
    counts = ehrhart_counts(poly.hrep, d)
    dv = delta_vector(counts, d)
    symmetric, unimodal = is_symmetric_unimodal(dv)
    report = {
        "command": "delta",
        "d": d,
        "counts": list(counts.values),
        "delta": list(dv),
        "normalized_volume": dv.normalized_volume,
        "symmetric": symmetric,
        "unimodal": unimodal,
        "reflexive": check_reflexive(poly.hrep),
        "fano": check_fano(poly.hrep, d),
        "normal": {
            "t_max": t_norm,
            "holds": check_normal(omega, poly.hrep, t_norm),
        },
        "facets": len(poly.hrep),
    }
    lines = [
        f"L(0..{d}) = {tuple(counts.values)}",
        f"delta = {tuple(dv)}",
        f"symmetric: {symmetric}   unimodal: {unimodal}",
        f"reflexive: {report['reflexive']}   fano: {report['fano']}",
        f"normal up to t = {t_norm}: {report['normal']['holds']}",
    ]
    _emit(report, cfg, lines)
    return EXIT_OK


def _reproduce_counterexample(cfg, checks):
    p, q = counterexample_pair()
    vs, fam = family_G(p, q)
    no_ext = common_linear_extension(p, q) is None
    not_interior = origin_in_interior(build_omega(p, q)) is None
    checks.append(("counterexample has no common extension", no_ext, ""))
    checks.append(("counterexample origin not interior", not_interior, ""))
    cubic = counterexample_cubic(vs)
    gens = toric_ideal_generators(vs)
    orders = [("default", default_order(vs))]
    rng = random.Random(cfg.seed)
    for k in range(cfg.trials):
        orders.append((f"random#{k}", make_order(vs, random_ranking(vs, rng))))
    for label, order in orders:
        gb = buchberger(gens, order)
        hit = any(g.key() == cubic.key() for g in gb)
        oriented = any(
            g.key() == cubic.key() and g.first == cubic.first for g in gb
        )
        checks.append(
            (
                f"cubic in reduced basis [{label}]",
                hit and oriented,
                binomial_text(vs, cubic),
            )
        )
    quad = quadratic_kernel_binomials(vs)
    gen2 = ideal_equality(quad, gens, default_order(vs))
    checks.append(("degree-2 part generates the toric ideal", gen2, ""))
    not_gb = not is_groebner(fam, gens, default_order(vs))
    checks.append(("quadratic family is not a Groebner basis here", not_gb, ""))


def _reproduce_delta_table(cfg, checks):
    for d in sorted(GOLDEN_DELTA):
        if d > cfg.dmax:
            continue
        p, q = chain_antichain_pair(d)
        poly = polytope_from_configuration(build_omega(p, q))
        dv = tuple(delta_vector(ehrhart_counts(poly.hrep, d), d))
        want = GOLDEN_DELTA[d]
        checks.append(
            (
                f"delta table d={d}",
                dv == want,
                f"got {dv}, want {want}" if dv != want else str(dv),
            )
        )


def cmd_reproduce(cfg):
    checks = []
    _reproduce_counterexample(cfg, checks)
    _reproduce_delta_table(cfg, checks)
    report = {
        "command": "reproduce",
        "seed": cfg.seed,
        "trials": cfg.trials,
        "checks": [
            {"name": name, "passed": ok, "detail": detail}
            for name, ok, detail in checks
        ],
        "passed": all(ok for _, ok, _ in checks),
    }
    lines = [
        f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else "")
        for name, ok, detail in checks
    ]
    lines.append("all checks passed" if report["passed"] else "FAILURES present")
    _emit(report, cfg, lines)
    return EXIT_OK if report["passed"] else EXIT_VERIFY


def cmd_fuzz(cfg):
    rng = random.Random(cfg.seed)
    violations = []
    agree_count = 0
    bundle_count = 0
    for trial in range(cfg.trials):
        d = rng.randint(2, max(2, cfg.dmax))
        p, q = random_pair(d, rng)
        ext = common_linear_extension(p, q)
        interior = origin_in_interior(build_omega(p, q))

        def record(kind):
            violations.append(
                {
                    "trial": trial,
                    "kind": kind,
                    "d": d,
                    "poset_p": p.to_text(),
                    "poset_q": q.to_text(),
                    "seed": cfg.seed,
                }
            )

        if (ext is None) != (interior is None):
            record("extension/interior disagreement")
        else:
            agree_count += 1
        vs = build_variables(p, q)
        gens = toric_ideal_generators(vs)
        quad = quadratic_kernel_binomials(vs)
        if not ideal_equality(quad, gens, default_order(vs)):
            record("degree-2 part fails to generate")
        if ext is not None:
            bundle_count += 1
            if not verify_theorem2(p, q, toric_gens=gens).passed:
                record("quadratic-basis checks failed")
    report = {
        "command": "fuzz",
        "seed": cfg.seed,
        "trials": cfg.trials,
        "dmax": cfg.dmax,
        "agreements": agree_count,
        "bundles_checked": bundle_count,
        "violations": violations,
    }
    lines = [
        f"trials: {cfg.trials}  (d up to {cfg.dmax}, seed {cfg.seed})",
        f"extension/interior agreements: {agree_count}/{cfg.trials}",
        f"quadratic-basis bundles checked: {bundle_count}",
        f"violations: {len(violations)}",
    ]
    for v in violations:
        lines.append(f"  {v['kind']}: P='{v['poset_p']}' Q='{v['poset_q']}'")
    _emit(report, cfg, lines)
    return EXIT_OK


def _build_parser():
    top = argparse.ArgumentParser(
        prog="twinpoly",
        description=(
            "Exact computations on twinned order polytopes of poset pairs"
        ),
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(sp, posets=True):
        if posets:
            sp.add_argument("--poset-p", required=True, help="poset file, format 'd; a<b ...'")
            sp.add_argument("--poset-q", required=True, help="poset file, format 'd; a<b ...'")
        sp.add_argument("--order", default="default", help="variable ranking file (lowest first) or 'default'")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--trials", type=int, default=None)
        sp.add_argument("--tmax", type=int, default=0, help="dilation bound for the normality check (default d+1)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--dmax", type=int, default=6, help="element-count cap")

    add_common(sub.add_parser("analyze", help="extension and interior verdicts"))
    add_common(sub.add_parser("groebner", help="family, reduced basis, checks"))
    add_common(sub.add_parser("delta", help="counts, delta-vector, property flags"))
    add_common(sub.add_parser("reproduce", help="rerun the built-in fixtures"), posets=False)
    add_common(sub.add_parser("fuzz", help="randomized cross-checks"), posets=False)
    return top


def _config_from_args(args):
    trials = args.trials
    if trials is None:
        trials = 25 if args.command == "reproduce" else 100
    if trials < 1:
        raise PosetError("trials must be at least 1")
    if args.tmax < 0:
        raise PosetError("tmax must be nonnegative")
    return RunConfig(
        command=args.command,
        poset_p=getattr(args, "poset_p", None),
        poset_q=getattr(args, "poset_q", None),
        order_spec=args.order,
        seed=args.seed,
        trials=trials,
        t_max=args.tmax,
        fmt=args.format,
        dmax=args.dmax,
    )


_COMMANDS = {
    "analyze": cmd_analyze,
    "groebner": cmd_groebner,
    "delta": cmd_delta,
    "reproduce": cmd_reproduce,
    "fuzz": cmd_fuzz,
}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[cfg.command](cfg)
    except (
        PosetError,
        GeometryError,
        ToricError,
        GroebnerError,
        EhrhartError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
