"""Permutations on ``{0, ..., n-1}`` with 1-indexed cycle notation for I/O.

Composition acts left to right: ``(p * q)(x) == q(p(x))``.  Conjugation
``p ** s`` is ``s^-1 * p * s``, so ``(1,2)(2,3)`` is ``(1,3,2)``: the point 1
goes to 2 under the first factor, then 2 goes to 3 under the second.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence


class CycleParseError(ValueError):
    """Raised for malformed cycle notation."""


class DegreeMismatch(ValueError):
    pass


_TOKEN = re.compile(r"\s*(\(|\)|,|\d+|\S)")


@dataclass(frozen=True, slots=True)
class Permutation:
    degree: int
    images: tuple[int, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if len(self.images) != self.degree or sorted(self.images) != list(range(self.degree)):
            raise ValueError(f"not a permutation of degree {self.degree}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(degree, tuple(range(degree)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        images = tuple(int(i) for i in images)
        return cls(len(images), images)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build from 0-indexed disjoint cycles."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for k, x in enumerate(cyc):
                if x in seen or not 0 <= x < degree:
                    raise ValueError(f"bad point {x} in cycles")
                seen.add(x)
                images[x] = cyc[(k + 1) % len(cyc)]
        return cls(degree, tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __pow__(self, other):
        if isinstance(other, Permutation):
            return conjugate(self, other)
        return power(self, other)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 0-indexed, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted cycle lengths, fixed points included as 1-cycles."""
        moved = sum(len(c) for c in self.cycles())
        lengths = [len(c) for c in self.cycles()] + [1] * (self.degree - moved)
        return tuple(sorted(lengths, reverse=True))

    @property
    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    @property
    def parity(self) -> str:
        return "even" if sum(len(c) - 1 for c in self.cycles()) % 2 == 0 else "odd"

    @property
    def is_even(self) -> bool:
        return self.parity == "even"

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Permutation({render(self)!r}, degree={self.degree})"


def _check(p: Permutation, q: Permutation):
    if p.degree != q.degree:
        raise DegreeMismatch(f"degree {p.degree} != {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    _check(p, q)
    qi = q.images
    return Permutation(p.degree, tuple(qi[x] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.images):
        inv[x] = i
    return Permutation(p.degree, tuple(inv))


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = Permutation.identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(p: Permutation, s: Permutation) -> Permutation:
    """``s^-1 * p * s``; maps ``s(x)`` to ``s(p(x))``."""
    _check(p, s)
    images = [0] * p.degree
    si = s.images
    for x, px in enumerate(p.images):
        images[si[x]] = si[px]
    return Permutation(p.degree, tuple(images))


def element_props(p: Permutation) -> tuple[int, str, tuple[int, ...]]:
    """Return ``(order, parity, cycle_type)``."""
    return p.order, p.parity, p.cycle_type()


def transposition(a: int, b: int, degree: int) -> Permutation:
    """Swap of two 1-indexed points."""
    return Permutation.from_cycles([(a - 1, b - 1)], degree)


def standard_cycle(n: int) -> Permutation:
    """The n-cycle ``(1,2,...,n)``."""
    return Permutation(n, tuple(list(range(1, n)) + [0]))


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-indexed cycle notation such as ``"(1,2,3)(4,5)"``.

    ``"()"`` and the empty string give the identity.  Whitespace is ignored.
    Errors name the offending token.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tokens.append(m.group(1))
        pos = m.end()

    cycles = []
    seen: set[int] = set()
    i = 0
    while i < len(tokens):
        if tokens[i] != "(":
            raise CycleParseError(f"expected '(' but found {tokens[i]!r} in {text!r}")
        i += 1
        cyc = []
        expect_point = True
        while True:
            if i >= len(tokens):
                raise CycleParseError(f"unclosed cycle in {text!r}")
            tok = tokens[i]
            i += 1
            if tok == ")":
                if cyc and expect_point:
                    raise CycleParseError(f"dangling ',' before ')' in {text!r}")
                break
            if expect_point:
                if not tok.isdigit():
                    raise CycleParseError(f"expected a point but found {tok!r} in {text!r}")
                x = int(tok)
                if not 1 <= x <= degree:
                    raise CycleParseError(f"point {tok!r} out of range 1..{degree}")
                if x in seen:
                    raise CycleParseError(f"repeated point {tok!r} in {text!r}")
                seen.add(x)
                cyc.append(x - 1)
                expect_point = False
            else:
                if tok != ",":
                    raise CycleParseError(f"expected ',' or ')' but found {tok!r} in {text!r}")
                expect_point = True
        if cyc:
            cycles.append(cyc)
    return Permutation.from_cycles(cycles, degree)


def render(p: Permutation) -> str:
    """1-indexed cycle notation; the identity renders as ``"()"``."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cycles)


def cycle_conjugator(c: Permutation, g: Permutation) -> Permutation:
    """A permutation ``s`` with ``conjugate(c, s) == g``.

    Both arguments must share a cycle type.  Cycles are matched longest first
    in the order :meth:`Permutation.cycles` lists them, fixed points in
    increasing order.
    """
    _check(c, g)
    if c.cycle_type() != g.cycle_type():
        raise ValueError("permutations are not conjugate: cycle types differ")

    def words(p):
        cyc = sorted(p.cycles(), key=len, reverse=True)
        moved = {x for cy in cyc for x in cy}
        return [x for cy in cyc for x in cy] + [x for x in range(p.degree) if x not in moved]

    images = [0] * c.degree
    for x, y in zip(words(c), words(g)):
        images[x] = y
    return Permutation(c.degree, tuple(images))


