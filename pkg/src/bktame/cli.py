"""Batch front-end: enumerate types, shapes, and weights for a context,
run formula-vs-oracle sweeps, solve the cycle decompositions, and emit
machine-readable reports.

Reports are deterministic for a fixed (config, seed): items are sorted by
a canonical key, JSON is emitted with sorted keys, and the summary's
millis field is pinned to zero (wall-clock timing goes to stderr) so that
repeated runs are byte-identical.  All JSON numbers are exact integers.
"""

import argparse
import json
import os
import sys
import time

from . import errors
from .rankone import galois_char, hom_dim, validate
from .rng import SplitMix64
from .shapes import (build_MN, ext_dim, ext_dim_oracle, family_dim,
                     hom_dim_oracle, kext_dim, kext_dim_oracle,
                     maximal_refined, p_tau, refined_shapes, shapes_for)
from .tametypes import (CUSPIDAL, PS, LocalContext, enumerate_types,
                        gamma_digits, make_type)
from .weights import (Cycle, all_weights, c_sigma_cycle, char_TN,
                      components_count, dieudonne_pattern, divisor_support,
                      sigma_tau_J, solve_n_tau, verify_orthogonality,
                      z_tau_cycle)

OUTPUT_DIR_ENV = "BKTAME_OUTPUT_DIR"


def _parse_type_selector(ctx, text):
    """Grammar: ps:<k0>,<k0p> | cusp:<k0> | scalar:<k0>."""
    try:
        head, _, rest = text.partition(":")
        if head == "ps":
            k0, k0p = (int(x) for x in rest.split(","))
            return make_type(ctx, PS, k0, k0p)
        if head == "scalar":
            k0 = int(rest)
            return make_type(ctx, PS, k0, k0)
        if head == "cusp":
            return make_type(ctx, CUSPIDAL, int(rest))
    except (ValueError, errors.BKError) as exc:
        raise errors.BadResidue("bad type selector %r: %s" % (text, exc))
    raise errors.BadResidue("bad type selector %r" % text)


def _selected_types(ctx, config):
    if config.type_selector:
        return [_parse_type_selector(ctx, config.type_selector)]
    return enumerate_types(ctx, canonical=not config.ordered)


def _shape_str(J):
    return "{" + ",".join(str(i) for i in sorted(J)) + "}"


def _weight_json(w):
    return {"t": list(w.t), "s": list(w.s)}


def _cycle_json(cycle):
    return [{"weight": _weight_json(w), "mult": m}
            for w, m in sorted(cycle.mult.items(), key=lambda kv: (kv[0].t, kv[0].s))]


class Config:
    def __init__(self, args):
        self.p = args.p
        self.f = args.f
        self.e = args.e
        self.type_selector = args.type
        self.ordered = args.ordered
        self.exhaustive = args.exhaustive
        self.samples = args.samples
        self.seed = args.seed
        self.fmt = args.format
        self.out = args.out
        self.trunc = args.trunc


def _make_report(command, ctx, items, echo):
    items = sorted(items, key=lambda it: it["key"])
    fails = sum(1 for it in items if it.get("ok") is False)
    return {
        "command": command,
        "echo": echo,
        "context": {"p": ctx.p, "f": ctx.f, "e": ctx.e},
        "items": items,
        "summary": {"pass": len(items) - fails, "fail": fails, "millis": 0},
    }


def cmd_types(ctx, config):
    items = []
    for tau in _selected_types(ctx, config):
        items.append({
            "key": tau.label(),
            "kind": tau.kind,
            "k0": tau.k0,
            "k0p": tau.k0p,
            "scalar": tau.is_scalar,
            "gamma": list(gamma_digits(tau)),
            "ok": True,
        })
    return items


def cmd_ptau(ctx, config):
    items = []
    for tau in _selected_types(ctx, config):
        admissible = {s.key() for s in p_tau(tau)}
        for shape in shapes_for(tau):
            rs = maximal_refined(tau, shape)
            items.append({
                "key": "%s|J=%s" % (tau.label(), _shape_str(shape.J)),
                "type": tau.label(),
                "J": sorted(shape.J),
                "in_ptau": shape.key() in admissible,
                "refined_count": len(refined_shapes(tau, shape)),
                "maximal_y": list(rs.y),
                "family_dim": family_dim(tau, rs),
                "ok": True,
            })
    return items


def cmd_weights(ctx, config):
    items = []
    for tau in _selected_types(ctx, config):
        total = 0
        for shape in p_tau(tau):
            w = sigma_tau_J(tau, shape)
            total += w.dim
            exp_formula = char_TN(tau, shape)
            _, n = build_MN(tau, maximal_refined(tau, shape))
            exp_alpha = galois_char(n).tame_exp
            items.append({
                "key": "%s|J=%s" % (tau.label(), _shape_str(shape.J)),
                "type": tau.label(),
                "J": sorted(shape.J),
                "weight": _weight_json(w),
                "dim": w.dim,
                "char_exponent": exp_formula,
                "char_exponent_alpha_route": exp_alpha,
                "ok": exp_formula == exp_alpha,
            })
        q = ctx.q
        want = 1 if tau.is_scalar else (q + 1 if tau.kind == PS else q - 1)
        items.append({
            "key": "%s|dimsum" % tau.label(),
            "type": tau.label(),
            "dim_total": total,
            "dim_expected": want,
            "ok": total == want,
        })
    return items


def _random_module(ctx, kind, rng):
    fp, f = ctx.fprime(kind), ctx.f
    ekk, ep = ctx.ekk(kind), ctx.eprime(kind)
    field = ctx.coefficient_field(kind)
    units = list(field.nonzero_elements())
    c_half = [rng.below(ekk) for _ in range(f)]
    c = tuple(c_half[i % f] for i in range(fp))
    r_half = []
    for i in range(f):
        base = (ctx.p * c[(i - 1) % fp] - c[i]) % ekk
        r_half.append(rng.choice(range(base, ep + 1, ekk)))
    r = tuple(r_half[i % f] for i in range(fp))
    a_half = [rng.choice(units) for _ in range(f)]
    a = tuple(a_half[i % f] for i in range(fp))
    return validate(ctx, kind, r, a, c)


def _exhaustive_modules(ctx, kind):
    fp, f = ctx.fprime(kind), ctx.f
    ekk, ep = ctx.ekk(kind), ctx.eprime(kind)
    field = ctx.coefficient_field(kind)
    if f != 1:
        raise errors.NotSupported("exhaustive sweeps are desk-scale: f = 1 only")
    mods = []
    for c0 in range(ekk):
        base = (ctx.p * c0 - c0) % ekk
        for r0 in range(base, ep + 1, ekk):
            for a in field.nonzero_elements():
                mods.append(validate(ctx, kind, (r0,) * fp, (a,) * fp, (c0,) * fp))
    return mods


def _module_json(m):
    return {"r": list(m.r), "a": [list(x.coeffs) for x in m.a], "c": list(m.c)}


def _pair_items(kind, pairs, trunc):
    items = []
    for idx, (m, n) in enumerate(pairs):
        ev, ov = ext_dim(m, n), ext_dim_oracle(m, n, trunc)
        hv, oh = hom_dim(m, n), hom_dim_oracle(m, n, trunc)
        items.append({
            "key": "%s|pair%06d" % (kind, idx),
            "kind": kind,
            "M": _module_json(m),
            "N": _module_json(n),
            "ext": ev, "ext_oracle": ov,
            "hom": hv, "hom_oracle": oh,
            "ok": ev == ov and hv == oh,
        })
    return items


def cmd_oracle(ctx, config):
    items = []
    rng = SplitMix64(config.seed)
    for kind in (PS, CUSPIDAL):
        if config.exhaustive:
            mods = _exhaustive_modules(ctx, kind)
            pairs = [(m, n) for m in mods for n in mods]
        else:
            pairs = [(_random_module(ctx, kind, rng), _random_module(ctx, kind, rng))
                     for _ in range(config.samples)]
        items.extend(_pair_items(kind, pairs, config.trunc))
    # kExt sweep over every maximal refined shape, both product choices
    for tau in enumerate_types(ctx, canonical=True):
        if tau.is_scalar:
            continue
        field = ctx.coefficient_field(tau.kind)
        gen = field.multiplicative_generator()
        for shape in shapes_for(tau):
            m, n = build_MN(tau, maximal_refined(tau, shape))
            n_twist = validate(ctx, tau.kind, n.r, (gen,) * tau.fprime, n.c)
            for tag, prod_b, nn in (("eq", field.one(), n), ("ne", gen, n_twist)):
                kv = kext_dim(tau, shape, field.one(), prod_b)
                ko = kext_dim_oracle(m, nn)
                items.append({
                    "key": "kext|%s|J=%s|%s" % (tau.label(), _shape_str(shape.J), tag),
                    "type": tau.label(),
                    "J": sorted(shape.J),
                    "products": tag,
                    "kext": kv, "kext_oracle": ko,
                    "ok": kv == ko,
                })
    return items


def cmd_bm(ctx, config):
    items = []
    ok_orth = verify_orthogonality(ctx)
    items.append({"key": "orthogonality", "ok": ok_orth})
    for w in all_weights(ctx):
        n = solve_n_tau(ctx, w)
        cyc = c_sigma_cycle(ctx, w)
        unit = Cycle.unit(w)
        n_perm = solve_n_tau(ctx, w, permute_seed=config.seed or 1)
        cyc_perm = c_sigma_cycle(ctx, w, permute_seed=config.seed or 1)
        items.append({
            "key": "weight|t=%s|s=%s" % (list(w.t), list(w.s)),
            "weight": _weight_json(w),
            "n_tau": [{"type": t.label(), "coeff": v} for t, v in
                      sorted(n.items(), key=lambda kv: kv[0].label())],
            "unit_cycle": cyc == unit,
            "unit_cycle_permuted": cyc_perm == unit,
            "n_tau_permuted_differs": n_perm != n,
            "ok": cyc == unit and cyc_perm == unit,
        })
    for tau in enumerate_types(ctx, canonical=True):
        cyc = z_tau_cycle(tau)
        items.append({
            "key": "ztau|%s" % tau.label(),
            "type": tau.label(),
            "cycle": _cycle_json(cyc),
            "ok": cyc.is_reduced_effective,
        })
    return items


def cmd_components(ctx, config):
    items = []
    for tau in _selected_types(ctx, config):
        if tau.is_scalar:
            items.append({
                "key": "%s|count" % tau.label(),
                "type": tau.label(),
                "components": components_count(tau),
                "ok": components_count(tau) == 1,
            })
            continue
        supports = set()
        for shape in shapes_for(tau):
            pattern = dieudonne_pattern(tau, shape)
            support = divisor_support(tau, shape)
            supports.add(tuple(sorted(support)))
            items.append({
                "key": "%s|J=%s" % (tau.label(), _shape_str(shape.J)),
                "type": tau.label(),
                "J": sorted(shape.J),
                "pattern": [list(entry) for entry in pattern.entries],
                "divisor_support": sorted(support),
                "ok": True,
            })
        items.append({
            "key": "%s|count" % tau.label(),
            "type": tau.label(),
            "components": len(supports),
            "ok": len(supports) == components_count(tau),
        })
        items.append({
            "key": "%s|cycle" % tau.label(),
            "type": tau.label(),
            "cycle": _cycle_json(z_tau_cycle(tau)),
            "ok": True,
        })
    return items


COMMANDS = {
    "types": cmd_types,
    "ptau": cmd_ptau,
    "weights": cmd_weights,
    "oracle": cmd_oracle,
    "bm": cmd_bm,
    "components": cmd_components,
}


def _render_csv(report):
    keys = sorted({k for it in report["items"] for k in it})
    lines = [",".join(keys)]
    for it in report["items"]:
        row = []
        for k in keys:
            v = it.get(k, "")
            if isinstance(v, (dict, list)):
                v = json.dumps(v, sort_keys=True, separators=(",", ":"))
            row.append('"%s"' % str(v).replace('"', '""'))
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def _render_text(report):
    lines = ["%s  p=%d f=%d e=%d" % (report["command"], report["context"]["p"],
                                     report["context"]["f"], report["context"]["e"])]
    for it in report["items"]:
        status = {True: "ok", False: "FAIL"}.get(it.get("ok"), "-")
        lines.append("  [%s] %s" % (status, it["key"]))
    s = report["summary"]
    lines.append("pass=%d fail=%d" % (s["pass"], s["fail"]))
    return "\n".join(lines) + "\n"


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(report)
    return _render_text(report)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bktame",
        description="exact sweeps over tame types, shapes, weights, and cycles")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("-p", type=int, required=True)
        cmd.add_argument("-f", type=int, required=True)
        cmd.add_argument("-e", type=int, default=1)
        cmd.add_argument("--type", default=None,
                         help="ps:<k0>,<k0p> | cusp:<k0> | scalar:<k0>")
        cmd.add_argument("--ordered", action="store_true",
                         help="list ordered pairs instead of canonical types")
        cmd.add_argument("--exhaustive", action="store_true")
        cmd.add_argument("--samples", type=int, default=100)
        cmd.add_argument("--seed", type=int, default=0)
        cmd.add_argument("--format", choices=("json", "csv", "text"), default="json")
        cmd.add_argument("--out", default=None)
        cmd.add_argument("--trunc", type=int, default=None,
                         help="oracle truncation override (stabilisation still checked)")
    return parser


def run(argv):
    """Parse, execute, and render; returns (report_text, exit_code)."""
    args = build_parser().parse_args(argv)
    config = Config(args)
    started = time.time()
    try:
        ctx = LocalContext(config.p, config.f, config.e)
        items = COMMANDS[args.command](ctx, config)
    except errors.BKError as exc:
        return "error: %s\n" % exc, 2
    report = _make_report(args.command, ctx, items,
                          {"argv": list(argv), "seed": config.seed})
    text = render(report, config.fmt)
    print("elapsed: %dms" % int(1000 * (time.time() - started)), file=sys.stderr)
    if config.out:
        path = config.out
        outdir = os.environ.get(OUTPUT_DIR_ENV)
        if outdir and not os.path.isabs(path):
            path = os.path.join(outdir, path)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    return text, (0 if report["summary"]["fail"] == 0 else 1)


def main(argv=None):
    text, code = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
