"""``recip`` command-line front end.

Every subcommand prints one report with ``command``, ``inputsDigest``,
``results`` and ``verdicts``.  Exit status is 0 when all verdicts pass, 1 when
any fails and 2 on unusable input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys

from . import randgen
from .bezoutian import bezoutian, cauchy_sweep, gamma_delta_bez
from .inertia import inertia, sylvester_bounds_check
from .network import NetworkError, element_bounds, network_realization, network_tilde, omega
from .polymat import coprime_decompose, det
from .ratmfd import gamma_hankel, is_proper, is_symmetric_tf, mcmillan_degree, properize
from .realization import (
    BehaviorMismatch, UnsupportedBehavior, check_theorem9, eliminate_state,
    minimal_signature_realization, verify_theorem5,
)
from .serialize import (
    InputError, dump_matrix, dump_mfd, dump_number, dump_polymatrix, dump_realization,
    load_matrix, load_mfd, load_network, load_realization, read_json,
)


class Report:
    def __init__(self, command: str):
        self.command = command
        self.inputs: list[bytes] = []
        self.results: dict = {}
        self.verdicts: list[dict] = []

    def add_input(self, raw: bytes):
        self.inputs.append(raw)

    def verdict(self, name: str, passed: bool, slack: int = 0):
        self.verdicts.append({"assertion": name, "passed": bool(passed), "slack": int(slack)})

    def from_verdicts(self, verdicts):
        for v in verdicts:
            self.verdict(v.name, v.passed, v.slack)

    @property
    def ok(self) -> bool:
        return all(v["passed"] for v in self.verdicts)

    def digest(self) -> str:
        h = hashlib.sha256()
        for raw in self.inputs:
            h.update(hashlib.sha256(raw).digest())
        return h.hexdigest()

    def to_json(self) -> dict:
        return {"command": self.command, "inputsDigest": self.digest(),
                "results": self.results, "verdicts": self.verdicts}

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False)
        lines = [f"command: {self.command}", f"inputsDigest: {self.digest()}"]
        for key in sorted(self.results):
            lines.append(f"{key}: {json.dumps(self.results[key], sort_keys=True, ensure_ascii=False)}")
        for v in self.verdicts:
            lines.append(f"{'PASS' if v['passed'] else 'FAIL'} {v['assertion']} (slack {v['slack']})")
        return "\n".join(lines)


def _load(report: Report, path: str):
    obj, raw = read_json(path)
    report.add_input(raw)
    return obj


def _mfd(report: Report, path: str):
    return load_mfd(_load(report, path), path)


# -- subcommands -----------------------------------------------------------------

def cmd_analyze(args, rep: Report):
    h = _mfd(rep, args.mfd)
    dec = coprime_decompose(h.P, h.Q)
    r = rep.results
    r["detQ"] = [dump_number(c) for c in det(h.Q).coeffs]
    r["proper"] = is_proper(h)
    r["symmetric"] = is_symmetric_tf(h)
    r["zeta"] = dec.zeta
    r["F"] = dump_polymatrix(dec.F)
    r["Ptilde"] = dump_polymatrix(dec.Ptilde)
    r["Qtilde"] = dump_polymatrix(dec.Qtilde)
    dc, dh = mcmillan_degree(h, "coprime"), mcmillan_degree(h, "hankel")
    r["mcmillanDegree"] = dc
    rep.verdict("McMillan-coprime=hankel", dc == dh, 0)
    if r["symmetric"]:
        g, d = gamma_delta_bez(h)
        gh = gamma_hankel(properize(h))
        r["gamma"], r["delta"] = g, d
        rep.verdict("Lem8-gamma", g == gh, 0)
        rep.verdict("Lem8-delta", d == dc, 0)


def cmd_bezoutian(args, rep: Report):
    h = _mfd(rep, args.mfd)
    bez = bezoutian(h.P, h.Q)
    ir = inertia(bez.data)
    rep.results.update({"bezoutian": dump_matrix(bez.data), "blockOrder": bez.m,
                        "pi": ir.positive, "nu": ir.negative, "zero": ir.zero})
    if is_symmetric_tf(h):
        g, d = gamma_delta_bez(h)
        rep.results.update({"gamma": g, "delta": d})
        if args.sweep:
            sw = cauchy_sweep(h, epsilon=args.epsilon)
            rep.results["sweep"] = sw
            rep.verdict("Def7-sweep=Lem8-gamma", sw == g, 0)
    elif args.sweep:
        raise InputError(args.mfd, "the sweep needs a symmetric transfer function")


def cmd_bounds(args, rep: Report):
    h = _mfd(rep, args.mfd)
    rep.results.update(element_bounds(h.P, h.Q).to_json())


def _theorem5_results(rep: Report, report):
    rep.results.update({"piSigma": report.pi_sigma, "nuSigma": report.nu_sigma,
                        "piBez": report.pi_bez, "nuBez": report.nu_bez, "zeta": report.zeta})
    rep.from_verdicts(report.verdicts)


def cmd_verify(args, rep: Report):
    sr = load_realization(_load(rep, args.realization), args.realization)
    h = _mfd(rep, args.mfd)
    try:
        report = verify_theorem5(sr, h)
    except BehaviorMismatch as exc:
        rep.results["diagnosis"] = str(exc)
        rep.verdict("Thm5-realizes", False, 0)
        return
    _theorem5_results(rep, report)


def cmd_realize(args, rep: Report):
    h = _mfd(rep, args.mfd)
    sr = minimal_signature_realization(h)
    rep.results["realization"] = dump_realization(sr)
    rep.results["states"] = sr.ss.d
    _theorem5_results(rep, verify_theorem5(sr, h))


def cmd_theorem9(args, rep: Report):
    h = _mfd(rep, args.mfd)
    obj = _load(rep, args.S)
    if isinstance(obj, dict):
        obj = obj.get("S")
    S = load_matrix(obj, f"{args.S}.S", rows=h.n)
    t9 = check_theorem9(h, S)
    rep.results.update({"gammaH": t9.gamma_H, "deltaH": t9.delta_H, "gammaSHS": t9.gamma_SHS,
                        "deltaSHS": t9.delta_SHS, "deltaSH": t9.delta_SH})
    rep.from_verdicts(t9.verdicts)


def cmd_network(args, rep: Report):
    data = load_network(_load(rep, args.data), args.data)
    sr = network_realization(data)
    Om, _ = omega(data)
    behavior = eliminate_state(network_tilde(data))
    bounds = element_bounds(behavior.P, behavior.Q)
    caps, inds = data.element_counts()
    real = {k: [[round(x, 12) + 0.0 for x in row] for row in v] if k in "ABCD" else v
            for k, v in dump_realization(sr).items()}
    rep.results.update({"realization": real, "Omega": dump_matrix(Om),
                        "drivingPoint": dump_mfd(behavior), "bounds": bounds.to_json(),
                        "capacitors": caps, "inductors": inds})
    rep.verdict("Thm6-capacitors", caps >= bounds.min_capacitors, caps - bounds.min_capacitors)
    rep.verdict("Thm6-inductors", inds >= bounds.min_inductors, inds - bounds.min_inductors)


def cmd_selftest(args, rep: Report):
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("RECIP_SEED", "0"))
    if args.trials < 0:
        raise InputError("--trials", "must be non-negative")
    rep.add_input(f"selftest:{args.trials}:{seed}".encode())
    rng = random.Random(seed)
    counts = {"Lem10": 0, "Thm9": 0, "Lem8": 0}
    for _ in range(args.trials):
        P, S = randgen.lemma10_pair(rng)
        counts["Lem10"] += sylvester_bounds_check(P, S).holds
        h, S = randgen.theorem9_pair(rng)
        counts["Thm9"] += check_theorem9(h, S).holds
        h = randgen.coprime_symmetric_mfd(rng)
        g, d = gamma_delta_bez(h)
        counts["Lem8"] += (g, d) == (gamma_hankel(h), mcmillan_degree(h, "hankel"))
    rep.results.update({"trials": args.trials, "seed": seed, "passed": counts})
    if not args.trials:
        return
    rep.verdict("Lem10-bounds", counts["Lem10"] == args.trials, 0)
    rep.verdict("Thm9-eq5-eq6", counts["Thm9"] == args.trials, 0)
    rep.verdict("Lem8-cross-route", counts["Lem8"] == args.trials, 0)


COMMANDS = {
    "analyze": cmd_analyze, "bezoutian": cmd_bezoutian, "bounds": cmd_bounds,
    "verify": cmd_verify, "realize": cmd_realize, "theorem9": cmd_theorem9,
    "network": cmd_network, "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="recip", description="Storage-element bounds for reciprocal behaviors.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--format", choices=("json", "text"), default="json")
        return sp

    add("analyze", "properness, symmetry, coprime factors and degrees").add_argument("--mfd", required=True)
    sp = add("bezoutian", "Bezoutian, its inertia, gamma and delta")
    sp.add_argument("--mfd", required=True)
    sp.add_argument("--sweep", action="store_true", help="compare with the eigenvalue-sweep oracle")
    sp.add_argument("--epsilon", type=float, default=None)
    add("bounds", "capacitor/inductor lower bounds").add_argument("--mfd", required=True)
    sp = add("verify", "check storage bounds for a given realization")
    sp.add_argument("--realization", required=True)
    sp.add_argument("--mfd", required=True)
    add("realize", "minimal signature-symmetric realization").add_argument("--mfd", required=True)
    sp = add("theorem9", "compression inequalities for S^T H S")
    sp.add_argument("--mfd", required=True)
    sp.add_argument("--S", required=True)
    add("network", "realization and bounds for hybrid network data").add_argument("--data", required=True)
    sp = add("selftest", "seeded randomized property suites")
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=None)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    rep = Report(args.command)
    try:
        COMMANDS[args.command](args, rep)
    except (InputError, NetworkError, UnsupportedBehavior) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return 2
    print(rep.render(args.format), file=out)
    return 0 if rep.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
