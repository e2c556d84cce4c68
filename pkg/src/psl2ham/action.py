"""The right action of G = PSL(2,k) on the 5(k+1) cosets of H.

Points of the coset space Omega are labeled (beta, fiber):

* beta is a point of the projective line: None for infinity, else a field
  handle.  It identifies the coset of the full upper-triangular stabilizer
  K containing Hg (k+1 possibilities).
* fiber in {0..4} locates Hg among the five H-cosets inside Kg, via the
  decomposition K = H + Ht + ... + Ht^4.

For g = [[a,b],[c,d]] the label is computed in O(1):
beta = -d/c (infinity when c = 0), and fiber = dlog(a*beta + b) mod 5
(dlog(a) mod 5 in the infinity case).  This is well defined on cosets and
independent of the sign representative because 10 | k-1.

The canonical representative of (beta, fiber) is rep = t^fiber * T_beta,
where T_inf = identity and T_beta = [[0,1],[-1,beta]]; the right action is
then act(omega, g) = point_of(rep(omega) * g).
"""

from __future__ import annotations

from functools import cached_property
from typing import NamedTuple

from .errors import InvariantViolation
from .gf import Field
from .psl2 import Mat, PSL2


class OmegaPoint(NamedTuple):
    beta: int | None  # None encodes the point at infinity
    fiber: int


def point_str(field: Field, p: OmegaPoint) -> str:
    b = "inf" if p.beta is None else field.element_str(p.beta)
    return f"{b}:{p.fiber}"


def parse_point(field: Field, text: str) -> OmegaPoint:
    body, _, fiber = text.rpartition(":")
    if not body:
        raise ValueError(f"malformed point {text!r}")
    f = int(fiber)
    if not 0 <= f <= 4:
        raise ValueError(f"fiber {f} out of range in {text!r}")
    beta = None if body == "inf" else field.parse_element(body)
    return OmegaPoint(beta, f)


class CosetAction:
    """Canonical labels and the right G-action on the coset space."""

    def __init__(self, field: Field, group: PSL2):
        k = field.order
        if (k - 1) % 10:
            raise ValueError("coset space requires 10 | k-1")
        self.field = field
        self.group = group
        self.size = 5 * (k + 1)

        l, t, u = group.generators()
        self.l, self.t, self.u = l, t, u
        self.t_pows = [group.identity]
        for _ in range(4):
            self.t_pows.append(group.mul(self.t_pows[-1], t))

        neg = field._neg
        self._transversal: dict[int | None, Mat] = {None: group.identity}
        for beta in range(k):
            self._transversal[beta] = group.canon((0, 1, neg[1], beta))

        # vertex order: fiber-major, infinity first, then coordinate-lex
        pts = []
        for i in range(5):
            pts.append(OmegaPoint(None, i))
            for beta in field.elements_lex:
                pts.append(OmegaPoint(beta, i))
        self.points: tuple[OmegaPoint, ...] = tuple(pts)
        self.index: dict[OmegaPoint, int] = {p: n for n, p in enumerate(pts)}
        self.alpha = OmegaPoint(None, 0)

        self._rep: dict[OmegaPoint, Mat] = {}
        for p in pts:
            self._rep[p] = group.mul(self.t_pows[p.fiber], self._transversal[p.beta])

    def transversal(self, beta: int | None) -> Mat:
        return self._transversal[beta]

    def rep(self, p: OmegaPoint) -> Mat:
        """Canonical coset representative: H*rep(p) has label p."""
        return self._rep[p]

    def point_of(self, g: Mat) -> OmegaPoint:
        """Label of the coset Hg.  Accepts either sign representative."""
        F = self.field
        a, b, c, d = g
        if c == 0:
            return OmegaPoint(None, F._log[a] % 5)
        beta = F.mul(F._neg[d], F.inv(c))
        return OmegaPoint(beta, F._log[F.add(F.mul(a, beta), b)] % 5)

    def act(self, p: OmegaPoint, g: Mat) -> OmegaPoint:
        return self.point_of(self.group.mul(self._rep[p], g))

    @cached_property
    def s_orbits(self) -> tuple[tuple[OmegaPoint, ...], ...]:
        """The ten orbits of S, each ordered by the Z_p coordinate.

        Orbit i (0..4) starts at (inf, i); orbit 5+i starts at the image
        of the base point under t^i * l.  Position w within an orbit is
        the power of the S-generator sigma carrying the start there.
        """
        G = self.group
        p = (self.field.order + 1) // 2
        orbits = []
        for i in range(5):
            orbits.append(tuple(self.point_of(G.mul(self.t_pows[i], s)) for s in G.S))
        for i in range(5):
            til = G.mul(self.t_pows[i], self.l)
            orbits.append(tuple(self.point_of(G.mul(til, s)) for s in G.S))
        seen: set[OmegaPoint] = set()
        for orb in orbits:
            if len(set(orb)) != p:
                raise InvariantViolation(
                    f"S-orbit has {len(set(orb))} points, expected {p}",
                    stage="action")
            seen.update(orb)
        if len(seen) != self.size:
            raise InvariantViolation(
                "S-orbits do not partition the point set", stage="action")
        return tuple(orbits)
