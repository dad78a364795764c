"""The ``smk`` command line.

Exit codes: 0 when every checked property holds, 1 when one is
falsified, 2 on invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import fan, geometry, mason, moebius, ortho, sympcore
from .corpus import corpus_from_json, corpus_to_json, generate_corpus, load, max_ground, resolve
from .errors import CoLoopInput, NotFound, ParseError, SmkError, ValidationError
from .groundset import GroundSet
from .suite import GROUPS, check_instance, run_suite


def _default(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def render(obj, as_json: bool) -> str:
    if as_json or not isinstance(obj, dict):
        return json.dumps(obj, sort_keys=True, indent=2, default=_default) + "\n"
    lines = [f"{key}: {json.dumps(obj[key], sort_keys=True, default=_default)}" for key in sorted(obj)]
    return "\n".join(lines) + "\n"


def _signed(gs: GroundSet, masks) -> list[list[int]]:
    return sorted(gs.mask_to_signed(B) for B in masks)


def _vec(v) -> list:
    return [x if isinstance(x, int) else Fraction(x) for x in v]


# ----------------------------------------------------------------------
# commands; each returns (payload, exit code)
# ----------------------------------------------------------------------

def cmd_gen(args):
    corpus = generate_corpus(args.max_n, seed=args.seed)
    return corpus_to_json(corpus), 0


def cmd_verify(args):
    entry = check_instance(load(args.instance), ("axioms", "structure"))
    return entry, 1 if entry["failures"] else 0


def cmd_flats(args):
    S = resolve(load(args.instance))
    L = S.lattice
    row = L.mobius_row(L.bottom)
    flats = [{"flat": S.gs.mask_to_signed(F), "rank": L.rank[F], "mu": row[L.index[F]]} for F in L.members]
    report = sympcore.check_cn_lattice(S.gs, L)
    return {"flats": flats, "mu": L.mobius_top(), "cn_lattice": report.ok, "rank": S.rank}, 0 if report else 1


def cmd_moebius(args):
    S = resolve(load(args.instance))
    gs = S.gs
    x = moebius.x_correction(S)
    out = {
        "mu": moebius.mobius_s(S),
        "mu_env": S.env.lattice.mobius_top(),
        "boolean_expansion": moebius.boolean_expansion_check(S),
        "x_correction": {"value": x.value, "terms": [[gs.mask_to_signed(F) for F in t] for t in x.terms]},
        "identity": moebius.identity_check(S),
        "sign_alternation": moebius.sign_alternation_check(S),
    }
    ok = out["boolean_expansion"] and out["identity"] and out["sign_alternation"]
    if S.rank >= 3:
        pairs = range(gs.size) if args.all_pairs else range(1)
        dc = {}
        for a in pairs:
            label = gs.to_signed(a)
            try:
                terms = moebius.deletion_contraction_terms(S, a)
                holds = moebius.deletion_contraction_check(S, a)
                dc[str(label)] = {"terms": list(terms), "holds": holds}
                ok &= holds
            except CoLoopInput:
                dc[str(label)] = {"coloop_pair": True}
        out["deletion_contraction"] = dc
    return out, 0 if ok else 1


def cmd_polytope(args):
    S = resolve(load(args.instance))
    gs = S.gs
    P = geometry.polytope(S)
    H = geometry.h_representation(S)
    report = geometry.h_eq_v_check(S)
    out = {
        "dim": P.dim(),
        "vertices": [_vec(v) for v in P.vertices],
        "h_rep": [{"normal": list(h.normal), "bound": h.bound, "source": h.source,
                   **({"flat": gs.mask_to_signed(h.flat), "phi": h.phi} if h.flat is not None else {})}
                  for h in H.inequalities],
        "h_eq_v": report["verdict"],
        "h_witnesses": [_vec(v) for v in report["witnesses"]],
        "gs_check": geometry.gelfand_serganova_check(gs, S.bases),
    }
    return out, 0 if out["gs_check"] and report["v_in_h"] else 1


def cmd_fan(args):
    S = resolve(load(args.instance))
    F = fan.bergman_fan(S)
    k = args.mw if args.mw is not None else F.top_dim
    if not 1 <= k <= F.top_dim:
        raise ValidationError("--mw", f"must lie between 1 and {F.top_dim}")
    rank, gens = fan.mw_group(F, k)
    out = {
        "rays": [list(r) for r in F.rays],
        "cones_by_dim": {str(d): len(F.of_dim(d)) for d in range(1, F.top_dim + 1)},
        "unimodular": fan.unimodularity_check(F),
        "env_fan": fan.env_fan_check(S),
        "refinement": fan.refinement_check(S, samples=args.samples, seed=args.seed),
        "mw_dim": k,
        "mw_rank": rank,
        "mw_generators": [[{"chain": [S.gs.mask_to_signed(G) for G in ch], "weight": w}
                           for ch, w in sorted(g.items())] for g in gens],
    }
    if k == F.top_dim:
        out["type_classes"] = {interp: len(fan.type_classes(S, interp)) for interp in ("d", "d_plus_1")}
        out["generators_respect_moves"] = fan.generators_respect_moves(S)
    ok = out["unimodular"] and out["env_fan"] and out["refinement"]
    return out, 0 if ok else 1


def cmd_mason(args):
    S = resolve(load(args.instance))
    out = mason.count_report(S).as_dict()
    out["counting_identity"] = mason.counting_identity_check(S)
    ok = out["counting_identity"]
    if S.rank >= 2:
        out["class_sizes"] = mason.class_size_check(S)
        ok &= out["class_sizes"]
    if S.rank == 3:
        out["rank3"] = mason.rank3_check(S)
        ok &= all(out["rank3"].values())
    return out, 0 if ok else 1


def _ortho_entry(gs: GroundSet, bases) -> dict:
    entry = {
        "bases": _signed(gs, bases),
        "orthogonal": ortho.is_orthogonal(gs, bases),
        "parity": ortho.parity_check(gs, bases),
        "symplectic": sympcore.is_symplectic(gs, bases),
        "gelfand_serganova": geometry.gelfand_serganova_check(gs, bases),
    }
    try:
        entry["envelope"] = ortho.envelope_theorem_check(gs, bases)
    except NotFound:
        entry["envelope"] = False
    return entry


def cmd_ortho(args):
    if args.enumerate is not None:
        n = args.enumerate
        if n < 1 or 2 * n > max_ground():
            raise ValidationError("--enumerate", f"need 1 <= 2n <= {max_ground()} (SMK_MAX_GROUND)")
        gs = GroundSet(n)
        samples = None if n <= 3 else args.samples
        entries = [_ortho_entry(gs, fam) for fam in ortho.enumerate_lagrangian(n, samples=samples, seed=args.seed)]
    else:
        inst = load(args.instance)
        if inst.kind not in ("orthogonal", "symplectic_bases"):
            raise ValidationError("$.kind", "ortho expects an orthogonal or symplectic_bases instance")
        gs = inst.gs
        entries = [_ortho_entry(gs, inst.masks())]
    failing = [e for e in entries if not (e["parity"] and e["envelope"] and e["symplectic"] == e["gelfand_serganova"])]
    out = {"count": len(entries), "failing": len(failing), "families": entries}
    return out, 1 if failing else 0


def cmd_corpus(args):
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        instances = corpus_from_json(data)
    else:
        instances = generate_corpus(args.max_n, seed=args.seed)
    groups = args.checks.split(",") if args.checks else list(GROUPS)
    bad = [g for g in groups if g not in GROUPS]
    if bad:
        raise ValidationError("--checks", f"unknown groups {bad}; choose from {', '.join(GROUPS)}")
    return run_suite(instances, groups, samples=args.samples, seed=args.seed)


# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="smk", description="Ranked symplectic matroid toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, instance=True):
        p = sub.add_parser(name, help=help_text)
        if instance:
            p.add_argument("instance", help="instance JSON file")
        p.add_argument("--json", action="store_true", help="emit JSON instead of key: value lines")
        p.add_argument("-o", "--output", help="write the report to this file")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=10)
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen, "write a generated corpus", instance=False)
    p.add_argument("--max-n", type=int, default=3)
    add("verify", cmd_verify, "axioms and structure lemmas for one instance")
    add("flats", cmd_flats, "lattice of flats with Moebius values")
    p = add("moebius", cmd_moebius, "Moebius function and its identities")
    p.add_argument("--all-pairs", action="store_true", help="deletion-contraction for every element")
    add("polytope", cmd_polytope, "polytope, H-description and edge check")
    p = add("fan", cmd_fan, "Bergman fan and Minkowski weights")
    p.add_argument("--mw", type=int, help="cone dimension for Minkowski weights (default: top)")
    add("mason", cmd_mason, "independent-set counts and log-concavity")
    p = add("ortho", cmd_ortho, "Lagrangian orthogonal matroids", instance=False)
    p.add_argument("instance", nargs="?", help="instance JSON file")
    p.add_argument("--enumerate", type=int, metavar="N", help="enumerate all (n<=3) or sampled families on n pairs")
    p = add("corpus", cmd_corpus, "run the check suite over a corpus", instance=False)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--input", help="corpus JSON (default: generate one)")
    p.add_argument("--checks", help=f"comma-separated groups from {', '.join(GROUPS)}")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "ortho" and (args.instance is None) == (args.enumerate is None):
        parser.error("ortho needs an instance file or --enumerate N, not both")
    if args.command in ("gen", "corpus") and not 2 <= args.max_n <= 4:
        parser.error("--max-n must be between 2 and 4")
    try:
        payload, code = args.func(args)
    except (ParseError, ValidationError, OSError, ValueError) as exc:
        print(f"smk: error: {exc}", file=sys.stderr)
        return 2
    except SmkError as exc:
        print(f"smk: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    text = render(payload, args.json or args.command in ("gen", "corpus"))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
