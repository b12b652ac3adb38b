"""Derivation of overgroup lists for witness files.

Given a transitive group ``M`` of prime degree ``n`` and an ``n``-cycle ``g``,
every conjugate of ``M`` under ``S_n`` that contains ``g`` is a conjugate by an
element of the normalizer of ``<g>`` (Sylow's theorem inside ``M``), so the
copies containing ``g`` are found by moving one copy onto ``g`` and then
conjugating it by that normalizer.
"""
from __future__ import annotations

import itertools
import random

from .chain import GeneratedGroup, StabilizerChain, build_chain, elements, is_member, subgroup_equal
from .certify import symmetric_cycle_normalizer
from .perm import Permutation, conjugate, cycle_conjugator

# Standard permutation generators of the Mathieu groups in their natural
# actions (as in the ATLAS and GAP's MathieuGroup library).
M11_GENERATORS = ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"]
M23_GENERATORS = ["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
                  "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"]


def projective_points(q: int = 3, dim: int = 3) -> list[tuple[int, ...]]:
    """Normalised nonzero vectors of GF(q)^dim (q prime): first nonzero entry is 1."""
    pts = []
    for v in itertools.product(range(q), repeat=dim):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def _normalise(v, q):
    lead = next(x for x in v if x)
    inv = pow(lead, q - 2, q)
    return tuple(x * inv % q for x in v)


def matrix_action(mat, q: int = 3) -> Permutation:
    """Permutation of projective points induced by ``v -> v @ mat`` over GF(q)."""
    pts = projective_points(q, len(mat))
    index = {p: i for i, p in enumerate(pts)}
    images = []
    for v in pts:
        w = tuple(sum(v[i] * mat[i][j] for i in range(len(v))) % q for j in range(len(mat)))
        images.append(index[_normalise(w, q)])
    return Permutation.from_images(images)


# Two transvection-type matrices; they generate SL(3,3) = PSL(3,3).
PSL33_MATRICES = [((1, 1, 0), (0, 1, 0), (0, 0, 1)),
                  ((0, 1, 0), (0, 0, 1), (1, 0, 0))]


def psl33() -> GeneratedGroup:
    return GeneratedGroup(13, [matrix_action(m) for m in PSL33_MATRICES], "PSL(3,3)")


def locate_cycle(chain: StabilizerChain, n: int, rng: random.Random, tries: int = 100_000) -> Permutation:
    """Random search for an element of order ``n`` (an ``n``-cycle when the degree is the prime ``n``)."""
    for _ in range(tries):
        p = chain.random_element(rng)
        if p.order == n:
            return p
    raise RuntimeError(f"no element of order {n} found in {tries} tries")


def overgroup_copies(group: GeneratedGroup, g: Permutation, seed: int = 0):
    """All ``S_n``-conjugates of ``group`` containing the ``n``-cycle ``g``.

    Returns ``(copies, expected)`` where ``expected`` is the count predicted by
    ``|N_{S_n}(<g>)| / |N_{S_n}(<g>) ∩ M|``.
    """
    n = g.degree
    chain = build_chain(group)
    c = locate_cycle(chain, n, random.Random(seed))
    sigma = cycle_conjugator(c, g)
    base = build_chain(GeneratedGroup(n, [conjugate(p, sigma) for p in group.generators], group.label))
    assert is_member(base, g)
    norm = symmetric_cycle_normalizer(n, g)
    inside = sum(1 for s in elements(norm) if is_member(base, s))
    expected = norm.order // inside
    copies: list[StabilizerChain] = []
    for s in elements(norm):
        cand = build_chain(GeneratedGroup(n, [conjugate(p, s) for p in base.generators], group.label))
        if not any(subgroup_equal(cand, k) for k in copies):
            copies.append(cand)
    return copies, expected
