"""Quotient multigraph over the ten S-orbits, voltage lifting, certificates.

Collapsing an orbital graph along the ten S-orbits gives a multigraph on
10 vertices: orbits A and B are joined by d(A,B) parallel edges, one per
neighbor of A's base vertex inside B.  Each such edge carries a voltage
w in Z_p, the position of that neighbor in B's cyclic order, so that
v_A(c) ~ v_B(c + w) for every offset c.

A closed walk through all ten orbits whose chosen voltages sum to w != 0
(mod p) unrolls to a single cycle through all 10p vertices; if w = 0 it
unrolls to p disjoint 10-cycles.  The certificate records the walk, the
chosen voltages and the full vertex cycle, and can be re-verified from
scratch using only closed-form neighborhoods.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import CosetAction, OmegaPoint, parse_point, point_str
from .errors import InvariantViolation
from .gf import Field
from .orbital import OrbitalGraph, neighborhood
from .psl2 import PSL2

CERT_FORMAT = "psl2ham-certificate"
CERT_VERSION = 1


@dataclass
class QuotientMultigraph:
    field: Field
    orbital_index: int
    p: int
    orbits: tuple[tuple[OmegaPoint, ...], ...]
    mult: tuple[tuple[int, ...], ...]  # 10x10, diagonal = intra-orbit valency
    voltages: tuple[tuple[tuple[int, ...], ...], ...]  # sorted Z_p offsets

    def base(self, a: int) -> OmegaPoint:
        return self.orbits[a][0]


def build_quotient(graph: OrbitalGraph, orbits) -> QuotientMultigraph:
    """Collapse graph along the given S-orbits, recording voltages.

    Checks S-invariance by recounting at a second vertex of each orbit.
    """
    action = graph.action
    k = action.field.order
    p = (k + 1) // 2
    pos: dict[OmegaPoint, tuple[int, int]] = {}
    for a, orb in enumerate(orbits):
        for w, pt in enumerate(orb):
            pos[pt] = (a, w)

    nmat = [[None] * 10 for _ in range(10)]
    for a in range(10):
        base_idx = graph.index[orbits[a][0]]
        volts: list[set[int]] = [set() for _ in range(10)]
        for v in graph.neighbors[base_idx]:
            b, w = pos[graph.vertices[v]]
            volts[b].add(w)
        for b in range(10):
            nmat[a][b] = tuple(sorted(volts[b]))

        # S-invariance: counts at position 1 must match those at the base
        other_idx = graph.index[orbits[a][1]]
        counts = [0] * 10
        for v in graph.neighbors[other_idx]:
            counts[pos[graph.vertices[v]][0]] += 1
        if counts != [len(nmat[a][b]) for b in range(10)]:
            raise InvariantViolation(
                f"neighbor counts differ across orbit {a}: S-invariance broken",
                stage="quotient")

    mult = tuple(tuple(len(nmat[a][b]) for b in range(10)) for a in range(10))
    for a in range(10):
        if sum(mult[a]) != k:
            raise InvariantViolation(
                f"orbit {a}: multiplicities sum to {sum(mult[a])}, expected {k}",
                stage="quotient")
        for b in range(10):
            if mult[a][b] != mult[b][a]:
                raise InvariantViolation(
                    f"multiplicity matrix asymmetric at ({a},{b})",
                    stage="quotient")
            if set(nmat[b][a]) != {(-w) % p for w in nmat[a][b]}:
                raise InvariantViolation(
                    f"voltage sets at ({a},{b}) are not negations",
                    stage="quotient")
    return QuotientMultigraph(
        field=action.field, orbital_index=graph.i, p=p,
        orbits=tuple(tuple(o) for o in orbits),
        mult=mult, voltages=tuple(tuple(row) for row in nmat))


@dataclass
class HamiltonCertificate:
    s: int
    m: int
    k: int
    p: int
    orbital_index: int
    cycle: tuple[int, ...]  # orbit sequence, length 10
    chosen_voltages: tuple[int, ...]  # one per cycle edge, length 10
    total_voltage: int
    vertices: tuple[OmegaPoint, ...]  # length 10p, in cycle order


DEFAULT_CYCLE = tuple(range(10))


def _check_cycle(q: QuotientMultigraph, cycle) -> tuple[int, ...]:
    cycle = tuple(cycle)
    if sorted(cycle) != list(range(10)):
        raise ValueError("cycle must visit each of the ten orbits exactly once")
    for e in range(10):
        if q.mult[cycle[e]][cycle[(e + 1) % 10]] < 1:
            raise ValueError(
                f"orbits {cycle[e]} and {cycle[(e + 1) % 10]} are not adjacent")
    return cycle


def unroll_lift(q: QuotientMultigraph, cycle, choices) -> list[list[OmegaPoint]]:
    """Explicitly unroll a voltage assignment over the closed walk.

    Returns the cycles of the lift: one 10p-cycle when the voltages sum
    to a nonzero residue mod p, else p disjoint 10-cycles.
    """
    cycle = _check_cycle(q, cycle)
    choices = tuple(choices)
    p = q.p
    out = []
    visited: set[tuple[int, int]] = set()
    for start in range(p):
        if (0, start) in visited:
            continue
        comp = []
        j, c = 0, start
        while (j, c) not in visited:
            visited.add((j, c))
            comp.append(q.orbits[cycle[j]][c])
            c = (c + choices[j]) % p
            j = (j + 1) % 10
        out.append(comp)
    return out


def lift_cycle(q: QuotientMultigraph, cycle=DEFAULT_CYCLE) -> HamiltonCertificate:
    """Choose voltages with nonzero total and unroll to a full cycle.

    Takes the smallest voltage on every edge; if the total vanishes mod p,
    the first edge with two or more parallel edges switches to its next
    alternative (any distinct alternative shifts the total off zero).
    """
    cycle = _check_cycle(q, cycle)
    p = q.p
    edge_sets = [q.voltages[cycle[e]][cycle[(e + 1) % 10]] for e in range(10)]
    choices = [vs[0] for vs in edge_sets]
    total = sum(choices) % p
    if total == 0:
        for e, vs in enumerate(edge_sets):
            if len(vs) < 2:
                continue
            done = False
            for alt in vs[1:]:
                if (total - vs[0] + alt) % p:
                    choices[e] = alt
                    total = (total - vs[0] + alt) % p
                    done = True
                    break
            if done:
                break
        else:
            raise InvariantViolation(
                "no voltage selection achieves nonzero total: quotient data "
                "is corrupt (some cycle edge should carry >= 2 voltages)",
                stage="quotient")
    components = unroll_lift(q, cycle, choices)
    if len(components) != 1 or len(components[0]) != 10 * p:
        raise InvariantViolation(
            f"lift with total voltage {total} did not produce a single "
            f"{10 * p}-cycle", stage="quotient")
    F = q.field
    return HamiltonCertificate(
        s=F.s, m=F.m, k=F.order, p=p,
        orbital_index=q.orbital_index, cycle=cycle,
        chosen_voltages=tuple(choices), total_voltage=total,
        vertices=tuple(components[0]))


# --- independent verification ---

@dataclass
class VerificationResult:
    ok: bool
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(field: Field, cert: HamiltonCertificate) -> VerificationResult:
    """Re-check a certificate from scratch.

    Rebuilds the group action from the field alone and tests adjacency
    with closed-form neighborhoods only; never consults a stored graph.
    """
    k = field.order
    if cert.k != k or cert.s != field.s or cert.m != field.m:
        return VerificationResult(False, "field parameters do not match certificate")
    if cert.s**cert.m != cert.k or cert.p != (cert.k + 1) // 2:
        return VerificationResult(False, "inconsistent certificate parameters")
    if not 0 <= cert.orbital_index <= 4:
        return VerificationResult(False, f"orbital index {cert.orbital_index} out of range")
    n = 10 * cert.p
    if len(cert.vertices) != n:
        return VerificationResult(
            False, f"cycle has {len(cert.vertices)} vertices, expected {n}")
    if cert.total_voltage % cert.p == 0:
        return VerificationResult(False, "total voltage vanishes mod p")

    seen: set[OmegaPoint] = set()
    for idx, v in enumerate(cert.vertices):
        if v in seen:
            return VerificationResult(
                False, f"vertex {idx} duplicates an earlier cycle vertex")
        seen.add(v)

    group = PSL2(field)
    action = CosetAction(field, group)
    if len(seen) != action.size:
        return VerificationResult(
            False, f"cycle covers {len(seen)} of {action.size} points")
    i = cert.orbital_index
    for idx in range(n):
        v, w = cert.vertices[idx], cert.vertices[(idx + 1) % n]
        if w not in neighborhood(action, i, v):
            where = "closing edge" if idx == n - 1 else f"step {idx}->{idx + 1}"
            return VerificationResult(
                False,
                f"{where}: {point_str(field, v)} and {point_str(field, w)} "
                f"are not adjacent in orbital graph {i}")
    return VerificationResult(True)


# --- serialization ---

def certificate_to_text(field: Field, cert: HamiltonCertificate) -> str:
    lines = [
        f"{CERT_FORMAT} {CERT_VERSION}",
        f"s {cert.s}",
        f"m {cert.m}",
        f"k {cert.k}",
        f"p {cert.p}",
        f"orbital {cert.orbital_index}",
        "cycle " + " ".join(str(a) for a in cert.cycle),
        "voltages " + " ".join(str(w) for w in cert.chosen_voltages),
        f"total {cert.total_voltage}",
        f"vertices {len(cert.vertices)}",
    ]
    lines.extend(point_str(field, v) for v in cert.vertices)
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> tuple[Field, HamiltonCertificate]:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines:
        raise ValueError("empty certificate")
    head = lines[0].split()
    if len(head) != 2 or head[0] != CERT_FORMAT:
        raise ValueError("not a certificate file")
    if int(head[1]) != CERT_VERSION:
        raise ValueError(f"unsupported certificate version {head[1]}")

    fields: dict[str, str] = {}
    for pos, key in enumerate(
            ["s", "m", "k", "p", "orbital", "cycle", "voltages", "total",
             "vertices"], start=1):
        name, _, val = lines[pos].partition(" ")
        if name != key:
            raise ValueError(f"expected {key!r} on line {pos + 1}, got {name!r}")
        fields[key] = val

    s, m, k, p = (int(fields[x]) for x in ("s", "m", "k", "p"))
    field = Field(s, m)
    if field.order != k:
        raise ValueError(f"s^m = {field.order} does not match k = {k}")
    n = int(fields["vertices"])
    body = lines[10:]
    if len(body) != n:
        raise ValueError(f"expected {n} vertex lines, found {len(body)}")
    cert = HamiltonCertificate(
        s=s, m=m, k=k, p=p,
        orbital_index=int(fields["orbital"]),
        cycle=tuple(int(x) for x in fields["cycle"].split()),
        chosen_voltages=tuple(int(x) for x in fields["voltages"].split()),
        total_voltage=int(fields["total"]),
        vertices=tuple(parse_point(field, ln) for ln in body))
    return field, cert
