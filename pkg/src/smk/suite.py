"""Run the library's checks over a list of instances and collect a JSON report."""
from __future__ import annotations

from typing import Callable, Iterable

from . import fan, geometry, mason, moebius, sympcore
from .corpus import Instance, is_exc, resolve
from .errors import CoLoopInput, DecompositionFailure, SmkError
from .matroid import ordinary_mobius_identities_check, weisner_check

GROUPS = ("axioms", "structure", "moebius", "polytope", "fan", "mason")


class _Group:
    """Collects asserted verdicts and recorded findings for one group."""

    def __init__(self):
        self.asserted: dict[str, bool] = {}
        self.recorded: dict = {}

    def check(self, name: str, value) -> None:
        self.asserted[name] = bool(value)

    def record(self, name: str, value) -> None:
        self.recorded[name] = value

    def as_dict(self) -> dict:
        return {"asserted": dict(sorted(self.asserted.items())), "recorded": dict(sorted(self.recorded.items()))}


def _axioms(S, g: _Group, **_):
    gs = S.gs
    g.check("admissible_matroid", sympcore.is_admissible_matroid(gs, S.env))
    g.check("cn_lattice", sympcore.check_cn_lattice(gs, S.lattice))
    g.check("symplectic", sympcore.is_symplectic(gs, S.bases))
    g.check("maximal_basis_admissible", sympcore.maximal_basis_admissible_check(S))


def _structure(S, g: _Group, **_):
    gs = S.gs
    g.check("flat_dichotomy", sympcore.flat_dichotomy_check(gs, S.env))
    g.check("strong_closure", sympcore.strong_closure_check(S))
    g.check("inadmissible_deletion", sympcore.inadmissible_deletion_check(S))
    g.check("atoms_admissible", sympcore.atoms_admissible_check(S))
    g.check("inadmissible_lattice", sympcore.inadmissible_lattice_check(S))
    g.check("covered_flats", sympcore.covered_flats_check(S))
    g.check("connectivity", sympcore.connectivity_check(S))
    g.check("codim1_connected", sympcore.codim1_connected(S.lattice))
    if S.rank >= 3:
        g.check("psi_bijective", all(sympcore.psi_bijection(S, a, "truncation")[1] for a in range(gs.size)))
        literal = []
        for a in range(gs.size):
            try:
                literal.append(sympcore.psi_bijection(S, a, "bases")[1])
            except DecompositionFailure:
                literal.append("decomposition failure")
        g.record("psi_on_bases", literal)


def _moebius(S, g: _Group, **_):
    gs = S.gs
    L = S.lattice
    g.record("mu", moebius.mobius_s(S))
    g.record("mu_env", S.env.lattice.mobius_top())
    g.check("boolean_expansion", moebius.boolean_expansion_check(S))
    g.check("weisner", all(weisner_check(L, a) for a in L.atoms))
    g.check("weisner_env", all(weisner_check(S.env.lattice, a) for a in S.env.lattice.atoms))
    g.check("x_correction_identity", moebius.identity_check(S))
    g.check("flat_sum_identity", all(moebius.flat_sum_identity(S, a, k)
                                     for a in range(gs.size) for k in range(1, S.rank)))
    ordinary = True
    for a in range(gs.size):
        if not S.env.coloops >> a & 1:
            ordinary &= ordinary_mobius_identities_check(S.env, a)
    g.check("ordinary_identities_env", ordinary)
    g.check("sign_alternation", moebius.sign_alternation_check(S))
    if S.rank >= 3:
        ok, coloop_pairs = True, []
        for a in range(gs.size):
            try:
                ok &= moebius.deletion_contraction_check(S, a)
            except CoLoopInput:
                coloop_pairs.append(gs.to_signed(a))
        g.check("deletion_contraction", ok)
        g.record("coloop_pairs", coloop_pairs)


def _polytope(S, g: _Group, **_):
    gs = S.gs
    P = geometry.polytope(S)
    dim = P.dim()
    g.record("dim", dim)
    g.check("dimension", dim == (1 if is_exc(S) else gs.n))
    g.check("env_dimension", geometry.ordinary_dimension_check(S.env))
    g.check("gelfand_serganova", geometry.gelfand_serganova_check(gs, S.bases))
    thm = True
    for B in S.env.bases:
        if not gs.is_admissible(B):
            predicted, actual = geometry.env_membership_check(S, B)
            thm &= predicted == actual
    g.check("env_membership", thm)
    report = geometry.h_eq_v_check(S)
    g.record("h_eq_v", report["verdict"])
    g.record("h_witnesses", [[str(x) for x in v] for v in report["witnesses"]])
    if S.rank >= 3:
        g.check("h_eq_v", report["verdict"] == "equal")
    else:
        g.check("v_in_h", report["v_in_h"])


def _fan(S, g: _Group, samples: int = 10, seed: int = 0, **_):
    F = fan.bergman_fan(S)
    g.check("unimodular", fan.unimodularity_check(F))
    g.check("unimodular_env", fan.unimodularity_check(fan.bergman_fan_ordinary(S.env)))
    g.check("env_fan", fan.env_fan_check(S))
    g.check("refinement", fan.refinement_check(S, samples=samples, seed=seed))
    g.check("loopless_face", fan.loopless_face_check(S.env, samples=samples, seed=seed))
    top = F.top_dim
    g.check("balancing_constant_one", fan.balancing_check(F, {c.chain: 1 for c in F.of_dim(top)}, top))
    rank, _ = fan.mw_group(F, top)
    g.record("mw_rank", rank)
    g.check("generators_respect_moves", fan.generators_respect_moves(S))
    counts = {interp: len(fan.type_classes(S, interp)) for interp in ("d", "d_plus_1")}
    g.record("type_class_counts", counts)
    winners = sorted(k for k, v in counts.items() if v == rank)
    g.record("type_class_match", winners)
    g.check("type_classes_match_some_reading", bool(winners))
    if fan.has_transversal_flat(S):
        g.check("transversal_flat_rank_one", rank == 1)


def _mason(S, g: _Group, **_):
    rep = mason.count_report(S)
    g.record("counts", rep.as_dict())
    g.check("counting_identity", mason.counting_identity_check(S))
    g.check("class_sizes", mason.class_size_check(S))
    g.check("env_ultra_log_concave", rep.I_log_concave["variant_3"])
    if S.rank == 3:
        for name, ok in mason.rank3_check(S).items():
            g.check(f"rank3_{name}", ok)
    else:
        g.record("S_log_concave", rep.S_log_concave)


RUNNERS: dict[str, Callable] = {
    "axioms": _axioms, "structure": _structure, "moebius": _moebius,
    "polytope": _polytope, "fan": _fan, "mason": _mason,
}


def check_instance(inst: Instance, groups: Iterable[str] = GROUPS, *, samples: int = 10, seed: int = 0) -> dict:
    entry = {"label": inst.label, "provenance": inst.provenance, "n": inst.n, "instance": inst.to_dict()}
    try:
        S = resolve(inst)
    except SmkError as exc:
        entry["error"] = f"{type(exc).__name__}: {exc}"
        entry["failures"] = ["resolve"]
        return entry
    entry["rank"] = S.rank
    entry["bases"] = sorted(S.gs.mask_to_signed(B) for B in S.bases)
    results, failures = {}, []
    for name in groups:
        grp = _Group()
        try:
            RUNNERS[name](S, grp, samples=samples, seed=seed)
        except (SmkError, AssertionError, ValueError) as exc:
            grp.check("raised", False)
            grp.record("error", f"{type(exc).__name__}: {exc}")
        results[name] = grp.as_dict()
        failures += [f"{name}.{k}" for k, v in sorted(grp.asserted.items()) if not v]
    entry["results"] = results
    entry["failures"] = failures
    return entry


def run_suite(instances: list[Instance], groups: Iterable[str] | None = None, *,
              samples: int = 10, seed: int = 0) -> tuple[dict, int]:
    """Report and exit code: 0 if every asserted check holds, 1 otherwise."""
    groups = list(GROUPS if groups is None else groups)
    unknown = [g for g in groups if g not in RUNNERS]
    if unknown:
        raise ValueError(f"unknown check groups: {', '.join(unknown)}")
    entries = [check_instance(inst, groups, samples=samples, seed=seed) for inst in instances]
    failing = [e for e in entries if e["failures"]]
    report = {
        "groups": groups,
        "instances": entries,
        "seed": seed,
        "samples": samples,
        "summary": {"instances": len(entries), "failing": len(failing)},
    }
    if not entries:
        report["note"] = "0 instances"
    if failing:
        smallest = min(failing, key=lambda e: (e["n"], len(e.get("bases", ())), e["label"]))
        report["minimal_failing_instance"] = {"label": smallest["label"], "instance": smallest["instance"],
                                              "failures": smallest["failures"]}
    return report, 1 if failing else 0
