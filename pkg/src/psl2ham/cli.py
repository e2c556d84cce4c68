"""Command-line surface: instance discovery, graph construction,
certificate emission, independent verification.

Exit codes: 0 success, 2 parameter error, 3 invariant violation,
4 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from dataclasses import dataclass

from .action import CosetAction
from .diag import solvability_report
from .errors import InvariantViolation, ParameterError
from .gf import Field, is_prime
from .orbital import (OrbitalGraph, build_graph, edgelist_lines, to_dot,
                      union_neighbor_sets)
from .psl2 import PSL2
from .quotient import (HamiltonCertificate, QuotientMultigraph,
                       VerificationResult, build_quotient, certificate_to_text,
                       lift_cycle, parse_certificate, verify_certificate)

DESK_SCALE_MAX_K = 5000


@dataclass(frozen=True)
class InstanceParams:
    s: int
    m: int
    k: int
    p: int

    @classmethod
    def create(cls, s: int, m: int) -> "InstanceParams":
        if not is_prime(s):
            raise ParameterError(f"s = {s} is not prime")
        if m < 1:
            raise ParameterError(f"m = {m} must be >= 1")
        k = s**m
        if k < 61:
            raise ParameterError(f"k = {k} is below the smallest admissible 61")
        if (k - 1) % 10:
            raise ParameterError(f"10 does not divide k-1 = {k - 1}")
        p = (k + 1) // 2
        if not is_prime(p):
            raise ParameterError(f"(k+1)/2 = {p} is not prime")
        return cls(s=s, m=m, k=k, p=p)


def factor_prime_power(k: int) -> tuple[int, int]:
    """k = s^m with s prime, else ParameterError."""
    if k < 2:
        raise ParameterError(f"k = {k} is not a prime power")
    s = k
    for d in range(2, int(k**0.5) + 1):
        if k % d == 0:
            s = d
            break
    m = 0
    v = k
    while v % s == 0:
        v //= s
        m += 1
    if v != 1:
        raise ParameterError(f"k = {k} is not a prime power")
    return s, m


def list_instances(max_k: int) -> list[InstanceParams]:
    """All admissible (s, m) with 61 <= k <= max_k."""
    out = []
    for s in range(2, max_k + 1):
        if not is_prime(s):
            continue
        m = 1
        k = s
        while k <= max_k:
            if k >= 61 and (k - 1) % 10 == 0 and is_prime((k + 1) // 2):
                out.append(InstanceParams(s=s, m=m, k=k, p=(k + 1) // 2))
            m += 1
            k *= s
    return sorted(out, key=lambda ip: ip.k)


@dataclass
class PipelineResult:
    params: InstanceParams
    graph: OrbitalGraph
    quotient: QuotientMultigraph
    certificate: HamiltonCertificate
    verification: VerificationResult


@contextmanager
def _stage(name):
    """Tag escaping invariant violations with the pipeline stage."""
    try:
        yield
    except InvariantViolation as exc:
        if exc.stage is None:
            exc.stage = name
        raise


def build_action(params: InstanceParams) -> CosetAction:
    field = Field(params.s, params.m)
    return CosetAction(field, PSL2(field))


def run_pipeline(params: InstanceParams, i: int,
                 action: CosetAction | None = None) -> PipelineResult:
    """field -> group -> action -> graph -> quotient -> lift -> verify."""
    if not 0 <= i <= 4:
        raise ParameterError(f"orbital index {i} out of range 0..4")
    if action is None:
        with _stage("gf"):
            field = Field(params.s, params.m)
        with _stage("psl2"):
            group = PSL2(field)
        with _stage("action"):
            action = CosetAction(field, group)
    with _stage("orbital"):
        graph = build_graph(action, i)
    with _stage("quotient"):
        quot = build_quotient(graph, action.s_orbits)
        cert = lift_cycle(quot)
    with _stage("verify"):
        result = verify_certificate(action.field, cert)
        if not result:
            raise InvariantViolation(
                f"emitted certificate failed verification: {result.failure}",
                stage="verify")
    return PipelineResult(params=params, graph=graph, quotient=quot,
                          certificate=cert, verification=result)


def full_graph_mode(params: InstanceParams, subset) -> HamiltonCertificate:
    """Certificate for the union of the chosen orbital graphs.

    Computes the cycle on the smallest chosen index and re-checks every
    cycle edge against the union's adjacency.
    """
    subset = sorted(set(subset))
    if not subset:
        raise ParameterError("orbital subset must be nonempty")
    if any(not 0 <= i <= 4 for i in subset):
        raise ParameterError("orbital indices must lie in 0..4")
    action = build_action(params)
    result = run_pipeline(params, subset[0], action=action)
    cert = result.certificate
    union = union_neighbor_sets(action, subset)
    n = len(cert.vertices)
    for idx in range(n):
        v, w = cert.vertices[idx], cert.vertices[(idx + 1) % n]
        if w not in union[action.index[v]]:
            raise InvariantViolation(
                "certificate cycle leaves the union graph", stage="full-graph")
    return cert


# --- argument handling ---

def _add_instance_args(sp):
    sp.add_argument("--s", type=int, help="prime characteristic")
    sp.add_argument("--m", type=int, default=1, help="extension degree (default 1)")
    sp.add_argument("--k", type=int, help="field order s^m (alternative to --s/--m)")
    sp.add_argument("--allow-large", action="store_true",
                    help=f"lift the k <= {DESK_SCALE_MAX_K} guard")


def _resolve_params(args) -> InstanceParams:
    if args.k is not None:
        if args.s is not None:
            raise ParameterError("give either --k or --s/--m, not both")
        s, m = factor_prime_power(args.k)
    elif args.s is not None:
        s, m = args.s, args.m
    else:
        raise ParameterError("one of --k or --s is required")
    params = InstanceParams.create(s, m)
    if params.k > DESK_SCALE_MAX_K and not args.allow_large:
        raise ParameterError(
            f"k = {params.k} exceeds the desk-scale guard "
            f"{DESK_SCALE_MAX_K}; pass --allow-large to proceed")
    return params


def _write_out(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _parse_subset(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise ParameterError(f"malformed orbital subset {text!r}")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="psl2ham",
        description="Hamilton cycle certificates for orbital graphs of "
                    "PSL(2,k) on 5(k+1) points")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("instances", help="list admissible parameters")
    sp.add_argument("--max-k", type=int, default=130)

    sp = sub.add_parser("build", help="build one orbital graph and export it")
    _add_instance_args(sp)
    sp.add_argument("--orbital", type=int, default=0)
    sp.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("quotient", help="print the quotient multigraph")
    _add_instance_args(sp)
    sp.add_argument("--orbital", type=int, default=0)
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("hamilton", help="emit a verified Hamilton certificate")
    _add_instance_args(sp)
    sp.add_argument("--orbital", type=int, default=0)
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("verify", help="re-verify a certificate file")
    sp.add_argument("--cert", required=True)

    sp = sub.add_parser("weil-report", help="solvability table for one field")
    _add_instance_args(sp)
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("full-graph",
                        help="certificate for a union of orbital graphs")
    _add_instance_args(sp)
    sp.add_argument("--orbitals", default="0,1,2,3,4",
                    help="comma-separated orbital indices")
    sp.add_argument("--out", default=None)
    return ap


def _quotient_text(q: QuotientMultigraph) -> str:
    lines = [f"orbital {q.orbital_index}  p {q.p}", "multiplicities:"]
    for row in q.mult:
        lines.append("  " + " ".join(f"{d:3d}" for d in row))
    lines.append("voltages:")
    for a in range(10):
        for b in range(10):
            if q.voltages[a][b]:
                vs = ",".join(str(w) for w in q.voltages[a][b])
                lines.append(f"  {a} {b}: {vs}")
    return "\n".join(lines) + "\n"


def run(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.command == "instances":
            for ip in list_instances(args.max_k):
                print(f"k={ip.k} s={ip.s} m={ip.m} p={ip.p}")
            return 0

        if args.command == "build":
            params = _resolve_params(args)
            if not 0 <= args.orbital <= 4:
                raise ParameterError("orbital index out of range 0..4")
            action = build_action(params)
            graph = build_graph(action, args.orbital)
            if args.format == "dot":
                _write_out(to_dot(graph), args.out)
            else:
                _write_out("\n".join(edgelist_lines(graph)) + "\n", args.out)
            return 0

        if args.command == "quotient":
            params = _resolve_params(args)
            if not 0 <= args.orbital <= 4:
                raise ParameterError("orbital index out of range 0..4")
            action = build_action(params)
            graph = build_graph(action, args.orbital)
            quot = build_quotient(graph, action.s_orbits)
            _write_out(_quotient_text(quot), args.out)
            return 0

        if args.command == "hamilton":
            params = _resolve_params(args)
            result = run_pipeline(params, args.orbital)
            text = certificate_to_text(result.graph.action.field,
                                       result.certificate)
            _write_out(text, args.out)
            if args.out not in (None, "-"):
                print(f"verified Hamilton cycle on {len(result.certificate.vertices)} "
                      f"vertices (orbital {args.orbital}, total voltage "
                      f"{result.certificate.total_voltage} mod {params.p})")
            return 0

        if args.command == "verify":
            with open(args.cert) as fh:
                field, cert = parse_certificate(fh.read())
            res = verify_certificate(field, cert)
            if res:
                print(f"certificate OK: {len(cert.vertices)} vertices, "
                      f"orbital {cert.orbital_index}, k={cert.k}")
                return 0
            print(f"certificate INVALID: {res.failure}")
            return 4

        if args.command == "weil-report":
            params = _resolve_params(args)
            field = Field(params.s, params.m)
            _write_out("\n".join(solvability_report(field)) + "\n", args.out)
            return 0

        if args.command == "full-graph":
            params = _resolve_params(args)
            subset = _parse_subset(args.orbitals)
            cert = full_graph_mode(params, subset)
            field = Field(params.s, params.m)
            _write_out(certificate_to_text(field, cert), args.out)
            if args.out not in (None, "-"):
                print(f"verified Hamilton cycle on {len(cert.vertices)} vertices "
                      f"inside the union of orbitals {sorted(set(subset))}")
            return 0

        raise AssertionError(f"unhandled command {args.command}")
    except (ParameterError, ValueError, OSError) as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        stage = f" [stage: {exc.stage}]" if exc.stage else ""
        print(f"invariant violation{stage}: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
