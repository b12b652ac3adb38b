"""Base and strong generating sets for permutation groups.

The chain is built by a deterministic incremental Schreier-Sims.  Transversal
representatives are stored as explicit permutations and mirrored into numpy
arrays so that enumeration and sifting can run on blocks of elements; that is
what makes checks over ~10^7 elements (M_23 against M_23) practical.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import prod
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .perm import DegreeMismatch, Permutation, compose, inverse, parse_cycles, render

DEFAULT_ELEMENT_BUDGET = 20_000_000
DEFAULT_MAX_STRONG_GENERATORS = 5_000
BLOCK_SIZE = 1 << 17


class BudgetExceeded(RuntimeError):
    """A configured resource cap was hit."""


@dataclass
class GeneratedGroup:
    degree: int
    generators: list[Permutation] = field(default_factory=list)
    label: str | None = None

    def __post_init__(self):
        for g in self.generators:
            if g.degree != self.degree:
                raise DegreeMismatch(f"generator {g} has degree {g.degree}, expected {self.degree}")

    def __repr__(self):
        gens = ", ".join(render(g) for g in self.generators)
        return f"GeneratedGroup({self.label or ''!s}: degree={self.degree}, <{gens}>)"


@dataclass
class Level:
    base_point: int
    strong_generators: list[Permutation]
    orbit: list[int]
    transversal: dict[int, Permutation]
    inverses: dict[int, Permutation]
    # numpy mirrors, filled by StabilizerChain._freeze()
    reps: np.ndarray | None = None
    inv_reps: np.ndarray | None = None
    index_of: np.ndarray | None = None


def _orbit_transversal(b: int, gens: Sequence[Permutation], degree: int):
    ident = Permutation.identity(degree)
    trans = {b: ident}
    orbit = [b]
    i = 0
    while i < len(orbit):
        x = orbit[i]
        ux = trans[x]
        for s in gens:
            y = s.images[x]
            if y not in trans:
                trans[y] = compose(ux, s)
                orbit.append(y)
        i += 1
    return orbit, trans


class StabilizerChain:
    """A BSGS for the group generated by ``generators``.

    Level ``i`` holds the basic orbit of ``base[i]`` under the pointwise
    stabilizer of ``base[:i]`` with one transversal representative ``u`` per
    orbit point ``x`` satisfying ``u(base[i]) == x``.  Every element factors
    uniquely as ``u_k * ... * u_1`` (left-to-right action).
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], label: str | None = None,
                 max_strong_generators: int = DEFAULT_MAX_STRONG_GENERATORS):
        self.degree = degree
        self.generators = [g for g in generators]
        self.label = label
        self.levels: list[Level] = []
        self._schreier_sims(max_strong_generators)
        self._freeze()

    # -- construction ------------------------------------------------------

    def _new_level(self, b: int, gens: list[Permutation]) -> Level:
        orbit, trans = _orbit_transversal(b, gens, self.degree)
        return Level(b, gens, orbit, trans, {x: inverse(u) for x, u in trans.items()})

    def _refresh(self, i: int):
        lvl = self.levels[i]
        orbit, trans = _orbit_transversal(lvl.base_point, lvl.strong_generators, self.degree)
        for x, u in trans.items():
            if x not in lvl.transversal:
                lvl.transversal[x] = u
                lvl.inverses[x] = inverse(u)
        # keep previously chosen representatives so the chain is stable
        lvl.orbit = orbit

    def _sift_from(self, g: Permutation, start: int) -> tuple[Permutation, int]:
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            x = g.images[lvl.base_point]
            if x not in lvl.inverses:
                return g, i
            g = compose(g, lvl.inverses[x])
        return g, len(self.levels)

    def _schreier_sims(self, cap: int):
        degree = self.degree
        strong = [g for g in self.generators if not g.is_identity()]
        if not strong:
            return
        base: list[int] = []
        for g in strong:
            if all(g.images[b] == b for b in base):
                base.append(min(g.support()))
        for i, b in enumerate(base):
            gens = [g for g in strong if all(g.images[c] == c for c in base[:i])]
            self.levels.append(self._new_level(b, gens))
        n_strong = len(strong)
        checked: list[set] = [set() for _ in self.levels]

        i = len(self.levels) - 1
        while i >= 0:
            lvl = self.levels[i]
            found = None
            for x in list(lvl.orbit):
                ux = lvl.transversal[x]
                for k, s in enumerate(lvl.strong_generators):
                    key = (x, k)
                    if key in checked[i]:
                        continue
                    y = s.images[x]
                    sch = compose(compose(ux, s), lvl.inverses[y])
                    h, j = self._sift_from(sch, i + 1)
                    if h.is_identity():
                        checked[i].add(key)
                        continue
                    found = (h, j)
                    break
                if found:
                    break
            if found is None:
                i -= 1
                continue
            h, j = found
            n_strong += 1
            if n_strong > cap:
                raise BudgetExceeded(f"stabilizer chain exceeded {cap} strong generators")
            if j == len(self.levels):
                self.levels.append(self._new_level(min(h.support()), []))
                checked.append(set())
            for l in range(i + 1, j + 1):
                self.levels[l].strong_generators.append(h)
                self._refresh(l)
            i = j

    def _freeze(self):
        n = self.degree
        for lvl in self.levels:
            m = len(lvl.orbit)
            lvl.reps = np.array([lvl.transversal[x].images for x in lvl.orbit], dtype=np.intp).reshape(m, n)
            lvl.inv_reps = np.array([lvl.inverses[x].images for x in lvl.orbit], dtype=np.intp).reshape(m, n)
            idx = np.full(n, -1, dtype=np.intp)
            idx[lvl.orbit] = np.arange(m)
            lvl.index_of = idx

    # -- queries -----------------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [lvl.base_point for lvl in self.levels]

    @property
    def orbit_sizes(self) -> list[int]:
        return [len(lvl.orbit) for lvl in self.levels]

    @property
    def order(self) -> int:
        return prod(self.orbit_sizes)

    @property
    def strong_generators(self) -> list[Permutation]:
        seen = {}
        for lvl in self.levels:
            for s in lvl.strong_generators:
                seen.setdefault(s.images, s)
        return list(seen.values())

    def sift(self, g: Permutation) -> tuple[Permutation, int]:
        """Residue of ``g`` and the level where sifting stopped."""
        if g.degree != self.degree:
            raise DegreeMismatch(f"degree {g.degree} != {self.degree}")
        return self._sift_from(g, 0)

    def __contains__(self, g: Permutation) -> bool:
        return is_member(self, g)

    def __len__(self):
        return self.order

    def __repr__(self):
        name = f"{self.label} " if self.label else ""
        return f"<StabilizerChain {name}degree={self.degree} order={self.order} base={[b + 1 for b in self.base]}>"

    def random_element(self, rng) -> Permutation:
        g = Permutation.identity(self.degree)
        for lvl in reversed(self.levels):
            x = lvl.orbit[rng.randrange(len(lvl.orbit))]
            g = compose(g, lvl.transversal[x])
        return g

    def to_group(self) -> GeneratedGroup:
        return GeneratedGroup(self.degree, list(self.generators), self.label)


def build_chain(g: GeneratedGroup, max_strong_generators: int = DEFAULT_MAX_STRONG_GENERATORS) -> StabilizerChain:
    return StabilizerChain(g.degree, g.generators, g.label, max_strong_generators)


def is_member(c: StabilizerChain, p: Permutation) -> bool:
    h, _ = c.sift(p)
    return h.is_identity()


# -- block enumeration and sifting ----------------------------------------

def _tail_split(c: StabilizerChain, block_size: int) -> int:
    sizes = c.orbit_sizes
    t = len(sizes)
    acc = 1
    while t > 0 and acc * sizes[t - 1] <= block_size:
        acc *= sizes[t - 1]
        t -= 1
    return t


def _products(levels: Sequence[Level], n: int) -> np.ndarray:
    """All products ``u_last * ... * u_first`` over ``levels`` (deepest first)."""
    acc = np.arange(n, dtype=np.intp)[None, :]
    for lvl in reversed(levels):
        acc = lvl.reps[:, acc].reshape(-1, n)
    return acc


def element_blocks(c: StabilizerChain, block_size: int = BLOCK_SIZE) -> Iterator[np.ndarray]:
    """Yield every element exactly once, as rows of ``(rows, degree)`` image arrays.

    Each block is one coset of the tail of the chain, so blocks partition the
    group and can be handed to independent workers.
    """
    n = c.degree
    t = _tail_split(c, block_size)
    tail = _products(c.levels[t:], n)
    head_levels = c.levels[:t]
    if not head_levels:
        yield tail
        return
    for choice in product(*(range(len(lvl.orbit)) for lvl in reversed(head_levels))):
        head = np.arange(n, dtype=np.intp)
        for lvl, j in zip(reversed(head_levels), choice):
            head = lvl.reps[j][head]
        yield head[tail]


def elements(c: StabilizerChain, budget: int = DEFAULT_ELEMENT_BUDGET) -> Iterator[Permutation]:
    """Stream each group element once."""
    if c.order > budget:
        raise BudgetExceeded(f"group of order {c.order} exceeds enumeration budget {budget}")
    for block in element_blocks(c):
        for row in block.tolist():
            yield Permutation(c.degree, tuple(row))


def element_array(c: StabilizerChain, budget: int = DEFAULT_ELEMENT_BUDGET) -> np.ndarray:
    if c.order > budget:
        raise BudgetExceeded(f"group of order {c.order} exceeds enumeration budget {budget}")
    return np.concatenate(list(element_blocks(c)), axis=0)


def sift_block(c: StabilizerChain, block: np.ndarray) -> np.ndarray:
    """Row indices of ``block`` whose permutations lie in ``c``."""
    if block.shape[1] != c.degree:
        raise DegreeMismatch(f"degree {block.shape[1]} != {c.degree}")
    rows = np.arange(block.shape[0])
    x = block
    for lvl in c.levels:
        idx = lvl.index_of[x[:, lvl.base_point]]
        ok = idx >= 0
        if not ok.all():
            rows, x, idx = rows[ok], x[ok], idx[ok]
            if rows.size == 0:
                return rows
        x = lvl.inv_reps[idx[:, None], x]
    ident = (x == np.arange(c.degree)).all(axis=1)
    return rows[ident]


def join(g: GeneratedGroup, extra: Sequence[Permutation],
         max_strong_generators: int = DEFAULT_MAX_STRONG_GENERATORS) -> StabilizerChain:
    """Chain for ``<g, extra>``."""
    for p in extra:
        if p.degree != g.degree:
            raise DegreeMismatch(f"degree {p.degree} != {g.degree}")
    return build_chain(GeneratedGroup(g.degree, list(g.generators) + list(extra), g.label),
                       max_strong_generators)


@dataclass
class TrivialityReport:
    trivial: bool
    witness: Permutation | None = None
    method: str = "sift-enumeration"
    checked: int = 0

    def to_dict(self) -> dict:
        return {"trivial": self.trivial,
                "witness": render(self.witness) if self.witness is not None else None,
                "method": self.method,
                "elements_checked": self.checked}


def intersect_trivial(h1: StabilizerChain, h2: StabilizerChain, budget: int = DEFAULT_ELEMENT_BUDGET,
                      threads: int = 1) -> TrivialityReport:
    """Decide whether ``h1`` and ``h2`` meet only in the identity.

    The smaller group is enumerated block by block and each block is sifted
    through the larger chain; the first non-identity member is returned as a
    witness.
    """
    if h1.degree != h2.degree:
        raise DegreeMismatch(f"degree {h1.degree} != {h2.degree}")
    small, big = (h1, h2) if h1.order <= h2.order else (h2, h1)
    if small.order > budget:
        raise BudgetExceeded(f"smaller group has order {small.order} > budget {budget}")
    ident = np.arange(small.degree)

    def scan(block):
        hits = sift_block(big, block)
        for r in hits:
            if not (block[r] == ident).all():
                return Permutation(small.degree, tuple(block[r].tolist()))
        return None

    checked = 0
    if threads <= 1:
        for block in element_blocks(small):
            w = scan(block)
            checked += block.shape[0]
            if w is not None:
                return TrivialityReport(False, w, checked=checked)
        return TrivialityReport(True, checked=checked)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        blocks = element_blocks(small)
        pending = []
        for block in blocks:
            pending.append((block.shape[0], pool.submit(scan, block)))
            if len(pending) >= 2 * threads:
                size, fut = pending.pop(0)
                checked += size
                w = fut.result()
                if w is not None:
                    for _, f in pending:
                        f.cancel()
                    return TrivialityReport(False, w, checked=checked)
        for size, fut in pending:
            checked += size
            w = fut.result()
            if w is not None:
                return TrivialityReport(False, w, checked=checked)
    return TrivialityReport(True, checked=checked)


def subgroup_leq(h1: StabilizerChain, h2: StabilizerChain) -> bool:
    if h1.degree != h2.degree:
        raise DegreeMismatch(f"degree {h1.degree} != {h2.degree}")
    if h2.order % h1.order:
        return False
    return all(is_member(h2, g) for g in h1.generators)


def subgroup_equal(h1: StabilizerChain, h2: StabilizerChain) -> bool:
    return h1.order == h2.order and subgroup_leq(h1, h2)


# -- group files -----------------------------------------------------------

def group_from_dict(d: dict) -> GeneratedGroup:
    degree = int(d["degree"])
    gens = [parse_cycles(s, degree) for s in d.get("generators", [])]
    return GeneratedGroup(degree, gens, d.get("label"))


def group_to_dict(g: GeneratedGroup, **extra) -> dict:
    d = {"label": g.label, "degree": g.degree, "generators": [render(p) for p in g.generators]}
    d.update(extra)
    return d


def load_group(path) -> GeneratedGroup:
    with open(path, encoding="utf-8") as fh:
        return group_from_dict(json.load(fh))


def save_group(g: GeneratedGroup, path, **extra):
    Path(path).write_text(json.dumps(group_to_dict(g, **extra), indent=2) + "\n", encoding="utf-8")
