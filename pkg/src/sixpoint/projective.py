"""Exact projective points, lines, and the section-point/ratio correspondence.

Points and lines carry canonical integer homogeneous coordinates, so
equality, incidence, collinearity, and concurrence are all exact
determinant-zero tests with no tolerance.  Points with ``w == 0`` are points
at infinity and are first-class citizens: parallel lines meet at one, and a
section ratio of -1 lands on one.

This module is also the brute-force oracle that every criterion and area
formula in the library is verified against, so it stays deliberately naive:
joins and meets are cross products, predicates are determinants, nothing is
shared with the formula evaluations except the integer arithmetic itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import _kernel
from .exact import ProjRatio, Rational


class UndefinedLineError(ValueError):
    """Join of two projectively equal points."""


class UndefinedPointError(ValueError):
    """Meet of two projectively equal lines."""


class NotAffineError(ValueError):
    """An operation needing affine points was given a point at infinity."""


class InvalidSegmentError(ValueError):
    """Section endpoints must be affine and distinct."""


class OffLineError(ValueError):
    """Ratio requested for a point not on the carrier line."""


class DegenerateTriangleError(ValueError):
    """Triangle vertices must be affine and not collinear."""


@dataclass(frozen=True)
class ProjPoint:
    """Point in canonical homogeneous coordinates (x : y : w).

    Canonical form: integer coordinates with gcd 1 and the first nonzero
    coordinate in the order (w, x, y) positive.  Affine points therefore
    always have w > 0.
    """

    x: int
    y: int
    w: int = 1

    def __post_init__(self):
        x, y, w = _kernel.norm_point(self.x, self.y, self.w)
        if x == 0 and y == 0 and w == 0:
            raise ValueError("(0 : 0 : 0) is not a projective point")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "w", w)

    @classmethod
    def affine(cls, x, y) -> "ProjPoint":
        """Affine point from exact coordinates (ints, Fractions, or strings)."""
        fx, fy = Fraction(x), Fraction(y)
        den = lcm(fx.denominator, fy.denominator)
        return cls(int(fx * den), int(fy * den), den)

    @property
    def is_infinite(self) -> bool:
        return self.w == 0

    def affine_coords(self) -> tuple[Rational, Rational]:
        if self.w == 0:
            raise NotAffineError(f"{self} is a point at infinity")
        return (Fraction(self.x, self.w), Fraction(self.y, self.w))

    def __str__(self) -> str:
        return f"{self.x}:{self.y}:{self.w}"


@dataclass(frozen=True)
class Line:
    """Line with canonical coefficients (l : m : n); incidence is l*x + m*y + n*w = 0."""

    l: int
    m: int
    n: int

    def __post_init__(self):
        l, m, n = _kernel.norm_line(self.l, self.m, self.n)
        if l == 0 and m == 0 and n == 0:
            raise ValueError("(0 : 0 : 0) is not a line")
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)

    def contains(self, p: ProjPoint) -> bool:
        return _kernel.dot3(self.l, self.m, self.n, p.x, p.y, p.w) == 0

    def __str__(self) -> str:
        return f"{self.l}:{self.m}:{self.n}"


@dataclass(frozen=True)
class Triangle:
    """Reference triangle: three affine, non-collinear vertices."""

    a: ProjPoint
    b: ProjPoint
    c: ProjPoint

    def __post_init__(self):
        for v in (self.a, self.b, self.c):
            if v.is_infinite:
                raise DegenerateTriangleError(f"vertex {v} is at infinity")
        if collinear(self.a, self.b, self.c):
            raise DegenerateTriangleError("vertices are collinear")

    @classmethod
    def from_coords(cls, a, b, c) -> "Triangle":
        return cls(ProjPoint.affine(*a), ProjPoint.affine(*b), ProjPoint.affine(*c))

    @classmethod
    def unit(cls) -> "Triangle":
        """The canonical test triangle (0,0), (1,0), (0,1)."""
        return cls.from_coords((0, 0), (1, 0), (0, 1))

    def area(self) -> Rational:
        return signed_area(self.a, self.b, self.c)


def join(p: ProjPoint, q: ProjPoint) -> Line:
    """The unique line through two distinct points."""
    v = _kernel.cross3(p.x, p.y, p.w, q.x, q.y, q.w)
    if v == (0, 0, 0):
        raise UndefinedLineError(f"join of equal points {p}")
    return Line(*v)


def meet(l1: Line, l2: Line) -> ProjPoint:
    """The unique common point of two distinct lines.

    Distinct parallel lines meet at a point at infinity.
    """
    v = _kernel.cross3(l1.l, l1.m, l1.n, l2.l, l2.m, l2.n)
    if v == (0, 0, 0):
        raise UndefinedPointError(f"meet of identical lines {l1}")
    return ProjPoint(*v)


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    """Exact test: the homogeneous 3x3 determinant vanishes."""
    return _kernel.det3(p.x, p.y, p.w, q.x, q.y, q.w, r.x, r.y, r.w) == 0


def concurrent(l1: Line, l2: Line, l3: Line) -> bool:
    """Exact test on coefficient rows.

    Three distinct parallel lines are concurrent: they share a point at
    infinity.
    """
    return _kernel.det3(l1.l, l1.m, l1.n, l2.l, l2.m, l2.n, l3.l, l3.m, l3.n) == 0


def signed_area(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> Rational:
    """Signed area of an affine triple; sign flips under odd permutations."""
    for v in (p, q, r):
        if v.is_infinite:
            raise NotAffineError(f"area undefined: {v} is at infinity")
    num, den = _kernel.area_num_den(p.x, p.y, p.w, q.x, q.y, q.w, r.x, r.y, r.w)
    return Fraction(num, den)


def section_point(b: ProjPoint, c: ProjPoint, r: ProjRatio) -> ProjPoint:
    """The point D on line BC with signed ratio |BD|/|DC| = r.

    r = 0 gives B, the infinite ratio gives C, and r = -1 gives the point at
    infinity of line BC.
    """
    if b.is_infinite or c.is_infinite:
        raise InvalidSegmentError("segment endpoints must be affine")
    if b == c:
        raise InvalidSegmentError("segment endpoints must be distinct")
    v = _kernel.section_combine(b.x, b.y, b.w, c.x, c.y, c.w, r.p, r.q)
    return ProjPoint(*v)


def ratio_of_section(b: ProjPoint, c: ProjPoint, d: ProjPoint) -> ProjRatio:
    """The unique r with section_point(b, c, r) = d.

    d must be incident to line BC; d at infinity yields -1.
    """
    if b.is_infinite or c.is_infinite:
        raise InvalidSegmentError("segment endpoints must be affine")
    if b == c:
        raise InvalidSegmentError("segment endpoints must be distinct")
    if not collinear(b, c, d):
        raise OffLineError(f"{d} is not on the line through {b} and {c}")
    p, q = _kernel.section_solve(b.x, b.y, b.w, c.x, c.y, c.w, d.x, d.y, d.w)
    return ProjRatio(p, q)


@dataclass(frozen=True)
class AffineMap:
    """Invertible affine map x -> M x + t with exact rational entries."""

    m11: Rational
    m12: Rational
    m21: Rational
    m22: Rational
    t1: Rational
    t2: Rational

    def __post_init__(self):
        for name in ("m11", "m12", "m21", "m22", "t1", "t2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.det == 0:
            raise ValueError("affine map is singular")

    @property
    def det(self) -> Rational:
        return self.m11 * self.m22 - self.m12 * self.m21

    def apply(self, p: ProjPoint) -> ProjPoint:
        """Image of a point; directions transform by the linear part."""
        fx = self.m11 * p.x + self.m12 * p.y + self.t1 * p.w
        fy = self.m21 * p.x + self.m22 * p.y + self.t2 * p.w
        den = lcm(fx.denominator, fy.denominator)
        return ProjPoint(int(fx * den), int(fy * den), p.w * den)

    def apply_triangle(self, t: Triangle) -> Triangle:
        return Triangle(self.apply(t.a), self.apply(t.b), self.apply(t.c))
