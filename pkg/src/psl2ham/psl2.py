"""Elements and distinguished subgroups of PSL(2,k), k odd.

A group element is a 4-tuple (a11, a12, a21, a22) of field handles with
determinant 1, stored in canonical sign form: of the two matrices g, -g
we keep the one whose first nonzero entry in reading order has discrete
log in [0, (k-1)/2).  Canonicalization makes tuples directly usable as
dict keys, which the coset machinery leans on heavily.

Distinguished elements and subgroups (all for 10 | k-1 where noted):

* ``l`` = [[0,-1],[1,0]], ``t`` = diag(theta, theta^-1), ``u`` = [[1,1],[0,1]]
* ``S``: the cyclic subgroup {s(a,b) = [[a,b],[b*theta,a]] : a^2 - b^2*theta = 1}
  of order (k+1)/2, enumerated as powers of a fixed generator
* ``H``: the point stabilizer U.<t^5> of order k(k-1)/10, where U is the
  full unipotent group {[[1,x],[0,1]]}
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .gf import Field

Mat = tuple[int, int, int, int]


def mulclose(gens, mul, max_size: int | None = None) -> set:
    """Closure of gens under mul (breadth-first)."""
    els = set(gens)
    boundary = list(els)
    while boundary:
        new = []
        for a in gens:
            for b in boundary:
                c = mul(a, b)
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if max_size and len(els) >= max_size:
                        return els
        boundary = new
    return els


@dataclass(frozen=True)
class SubgroupSpec:
    name: str
    order: int
    description: str


class PSL2:
    """The group PSL(2,k) over a Field with odd order k."""

    def __init__(self, field: Field):
        if field.order % 2 == 0:
            raise ValueError("PSL(2,k) machinery here requires odd k")
        self.field = field
        k = field.order
        half = (k - 1) // 2
        # _pos[e]: e is the canonical representative of {e, -e}
        self._pos = [False] * k
        for e in range(1, k):
            self._pos[e] = field.dlog(e) < half
        self.identity: Mat = (1, 0, 0, 1)

    # --- element operations ---

    def canon(self, g: Mat) -> Mat:
        for e in g:
            if e:
                if self._pos[e]:
                    return g
                n = self.field._neg
                return (n[g[0]], n[g[1]], n[g[2]], n[g[3]])
        raise ValueError("zero matrix is not a group element")

    def det(self, g: Mat) -> int:
        F = self.field
        return F.sub(F.mul(g[0], g[3]), F.mul(g[1], g[2]))

    def mul(self, g: Mat, h: Mat) -> Mat:
        F = self.field
        a, b, c, d = g
        e, f, gg, hh = h
        return self.canon((
            F.add(F.mul(a, e), F.mul(b, gg)), F.add(F.mul(a, f), F.mul(b, hh)),
            F.add(F.mul(c, e), F.mul(d, gg)), F.add(F.mul(c, f), F.mul(d, hh)),
        ))

    def inv(self, g: Mat) -> Mat:
        a, b, c, d = g
        n = self.field._neg
        return self.canon((d, n[b], n[c], a))

    def conj(self, g: Mat, h: Mat) -> Mat:
        """h^-1 g h."""
        return self.mul(self.mul(self.inv(h), g), h)

    def power(self, g: Mat, e: int) -> Mat:
        if e < 0:
            return self.power(self.inv(g), -e)
        r = self.identity
        while e:
            if e & 1:
                r = self.mul(r, g)
            g = self.mul(g, g)
            e >>= 1
        return r

    def order(self, g: Mat) -> int:
        n, x = 1, g
        cap = self.group_order()
        while x != self.identity:
            x = self.mul(x, g)
            n += 1
            if n > cap:
                raise AssertionError("order computation exceeded |G|")
        return n

    def group_order(self) -> int:
        k = self.field.order
        return k * (k * k - 1) // 2

    # --- distinguished elements ---

    def generators(self) -> tuple[Mat, Mat, Mat]:
        """(l, t, u); requires k = 1 (mod 4)."""
        F = self.field
        k = F.order
        if k % 2 == 0:
            raise ValueError("k must be odd")
        if k % 4 != 1:
            raise ValueError("generators require k = 1 (mod 4)")
        l = self.canon((0, F.neg(1), 1, 0))
        t = self.canon((F.theta, 0, 0, F.inv(F.theta)))
        u = self.canon((1, 1, 0, 1))
        return l, t, u

    def s_element(self, a: int, b: int) -> Mat:
        F = self.field
        g = (a, b, F.mul(b, F.theta), a)
        if self.det(g) != 1:
            raise ValueError("a^2 - b^2*theta = 1 violated")
        return self.canon(g)

    # --- subgroup enumerations ---

    @cached_property
    def S(self) -> tuple[Mat, ...]:
        """The cyclic subgroup of order (k+1)/2, listed as powers of a
        fixed generator sigma, so list position is the Z_p coordinate."""
        F = self.field
        found: dict[Mat, None] = {}
        for b in F.elements_lex:
            rhs = F.add(1, F.mul(F.theta, F.mul(b, b)))  # a^2 = 1 + theta*b^2
            for a in F.sqrt_list(rhs):
                found.setdefault(self.s_element(a, b))
        n = (F.order + 1) // 2
        if len(found) != n:
            raise AssertionError(f"expected {n} elements in S, found {len(found)}")
        sigma = next(g for g in found if g != self.identity and self.order(g) == n)
        ordered = [self.identity]
        x = sigma
        while x != self.identity:
            ordered.append(x)
            x = self.mul(x, sigma)
        if len(ordered) != n or set(ordered) != set(found):
            raise AssertionError("powers of sigma do not enumerate S")
        return tuple(ordered)

    @cached_property
    def H(self) -> tuple[Mat, ...]:
        """The point stabilizer U.<t^5>: all [[theta^{5r}, y],[0, theta^{-5r}]],
        of order k(k-1)/10."""
        F = self.field
        k = F.order
        if (k - 1) % 10:
            raise ValueError("H requires 10 | k-1")
        out = []
        for r in range((k - 1) // 10):
            d1 = F.pow(F.theta, 5 * r)
            d2 = F.inv(d1)
            for y in F.elements_lex:
                out.append(self.canon((d1, y, 0, d2)))
        if len(set(out)) != k * (k - 1) // 10:
            raise AssertionError("H enumeration produced duplicates")
        return tuple(out)

    def unipotents(self) -> tuple[Mat, ...]:
        """U = {[[1,x],[0,1]]}, order k."""
        return tuple(self.canon((1, x, 0, 1)) for x in self.field.elements_lex)

    def subgroup_specs(self) -> dict[str, SubgroupSpec]:
        k = self.field.order
        return {
            "K": SubgroupSpec("K", k * (k - 1) // 2, "<u, t>: stabilizer of infinity"),
            "H": SubgroupSpec("H", k * (k - 1) // 10, "U.<t^5>: index-5 subgroup of K"),
            "S": SubgroupSpec("S", (k + 1) // 2, "cyclic torus {s(a,b): a^2-b^2*theta=1}"),
            "U": SubgroupSpec("U", k, "unipotent group {[[1,x],[0,1]]}"),
        }


def mat_str(field: Field, g: Mat) -> str:
    """Row-major, space-separated field-element strings."""
    return " ".join(field.element_str(e) for e in g)


def parse_mat(field: Field, text: str) -> Mat:
    parts = text.split()
    if len(parts) != 4:
        raise ValueError(f"expected 4 entries, got {len(parts)}")
    return tuple(field.parse_element(p) for p in parts)  # type: ignore[return-value]
