"""Subgroup enumeration for small permutation groups and a catalog of test groups.

Elements of the ambient group are sorted lexicographically by image array, so
element indices (and hence subgroup keys) do not depend on the generating set.
Subgroups are held as sorted index arrays into that element list.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .chain import (BudgetExceeded, GeneratedGroup, StabilizerChain, build_chain,
                    element_array, element_blocks, DEFAULT_ELEMENT_BUDGET)
from .perm import Permutation, parse_cycles

DEFAULT_GROUP_BUDGET = 5040
DEFAULT_LATTICE_BUDGET = 100_000


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def _prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return n == 1


# -- catalog ---------------------------------------------------------------

def _quaternion8() -> GeneratedGroup:
    # elements (sign, unit) with units 1, i, j, k encoded 0..3; index = 4*sign + unit
    table = {(0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
             (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
             (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
             (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0)}

    def right_mult(unit):
        images = []
        for idx in range(8):
            s, u = divmod(idx, 4)
            s2, u2 = table[(u, unit)]
            images.append(4 * ((s + s2) % 2) + u2)
        return Permutation.from_images(images)

    return GeneratedGroup(8, [right_mult(1), right_mult(2)], "Q8")


def _shift(p: Permutation, offset: int, degree: int) -> Permutation:
    images = list(range(degree))
    for i, x in enumerate(p.images):
        images[offset + i] = offset + x
    return Permutation(degree, tuple(images))


def direct_product(factors: Sequence[GeneratedGroup]) -> GeneratedGroup:
    """Factors act on consecutive disjoint blocks of points."""
    degree = sum(f.degree for f in factors)
    gens = []
    offset = 0
    for f in factors:
        gens.extend(_shift(g, offset, degree) for g in f.generators)
        offset += f.degree
    label = "x".join(f.label or "?" for f in factors)
    return GeneratedGroup(degree, gens, label)


def _factor(spec) -> GeneratedGroup:
    if isinstance(spec, GeneratedGroup):
        return spec
    if isinstance(spec, str):
        name, _, params = spec.partition(":")
        args = [int(x) for x in params.split(",")] if params else []
        return catalog(name, *args)
    name, *args = spec
    return catalog(name, *args)


def catalog(name: str, *params) -> GeneratedGroup:
    """Named permutation groups.

    ``cyclic n``, ``dihedral n`` (order 2n), ``quaternion8``, ``symmetric n``,
    ``alternating n``, ``elementary_abelian p k``, ``direct_product factors``
    (each factor a ``"name:params"`` string, a ``(name, *params)`` tuple, or a
    group) and ``from_file path``.
    """
    try:
        if name == "cyclic":
            (n,) = params
            n = int(n)
            if n < 1:
                raise ValueError("n must be positive")
            gens = [] if n == 1 else [Permutation(n, tuple(list(range(1, n)) + [0]))]
            return GeneratedGroup(n, gens, f"C{n}")
        if name == "dihedral":
            (n,) = params
            n = int(n)
            if n < 3:
                raise ValueError("dihedral needs n >= 3")
            rot = Permutation(n, tuple(list(range(1, n)) + [0]))
            ref = Permutation(n, tuple((-i) % n for i in range(n)))
            return GeneratedGroup(n, [rot, ref], f"D{2 * n}")
        if name == "quaternion8":
            if params:
                raise ValueError("quaternion8 takes no parameters")
            return _quaternion8()
        if name == "symmetric":
            (n,) = params
            n = int(n)
            if n < 1:
                raise ValueError("n must be positive")
            if n == 1:
                return GeneratedGroup(1, [], "S1")
            gens = [Permutation(n, tuple(list(range(1, n)) + [0]))]
            if n > 2:
                gens.append(Permutation.from_cycles([(0, 1)], n))
            return GeneratedGroup(n, gens, f"S{n}")
        if name == "alternating":
            (n,) = params
            n = int(n)
            if n < 1:
                raise ValueError("n must be positive")
            gens = [Permutation.from_cycles([(0, 1, i)], n) for i in range(2, n)]
            return GeneratedGroup(n, gens, f"A{n}")
        if name == "elementary_abelian":
            p, k = (int(x) for x in params)
            if not _is_prime(p) or k < 1:
                raise ValueError("need a prime p and k >= 1")
            g = direct_product([catalog("cyclic", p)] * k)
            g.label = f"{p}^{k}"
            return g
        if name == "direct_product":
            factors = params[0] if len(params) == 1 and not isinstance(params[0], str) else params
            factors = [_factor(f) for f in factors]
            if not factors:
                raise ValueError("direct_product needs at least one factor")
            return direct_product(factors)
        if name == "from_file":
            (path,) = params
            from .chain import load_group
            return load_group(path)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"invalid parameters for {name!r}: {params!r} ({exc})") from exc
    raise ValueError(f"unknown catalog group {name!r}")


# Built-in groups used by the lemma and oracle suites.
BUILTIN_GROUPS: list[tuple] = [
    ("cyclic", 2), ("cyclic", 4), ("cyclic", 6), ("cyclic", 8), ("cyclic", 12), ("cyclic", 30),
    ("dihedral", 3), ("dihedral", 4), ("dihedral", 5), ("dihedral", 6), ("dihedral", 8),
    ("quaternion8",),
    ("elementary_abelian", 2, 2), ("elementary_abelian", 2, 3), ("elementary_abelian", 3, 2),
    ("direct_product", ["cyclic:4", "cyclic:2"]),
    ("direct_product", ["cyclic:4", "cyclic:4"]),
    ("direct_product", ["cyclic:6", "cyclic:2"]),
    ("direct_product", ["symmetric:3", "cyclic:2"]),
    ("direct_product", ["symmetric:3", "symmetric:3"]),
    ("direct_product", ["alternating:4", "cyclic:2"]),
    ("direct_product", ["quaternion8", "cyclic:2"]),
    ("symmetric", 3), ("symmetric", 4), ("symmetric", 5), ("symmetric", 6),
    ("alternating", 4), ("alternating", 5), ("alternating", 6), ("alternating", 7),
]


def builtin_groups(max_order: int | None = None) -> list[GeneratedGroup]:
    out = []
    for name, *params in BUILTIN_GROUPS:
        g = catalog(name, *params)
        if max_order is None or build_chain(g).order <= max_order:
            out.append(g)
    return out


# -- ambient element tables -------------------------------------------------

class ElementTable:
    """All elements of a small group with multiplication by index."""

    def __init__(self, group: GeneratedGroup, budget: int = DEFAULT_GROUP_BUDGET):
        self.group = group
        self.chain = build_chain(group)
        if self.chain.order > budget:
            raise BudgetExceeded(f"group order {self.chain.order} exceeds small-group budget {budget}")
        n = group.degree
        els = element_array(self.chain, DEFAULT_ELEMENT_BUDGET)
        order = np.lexsort(els.T[::-1])
        self.elements = np.ascontiguousarray(els[order])
        self.degree = n
        self.size = self.elements.shape[0]
        rng = np.random.default_rng(0)
        while True:
            self._weights = rng.integers(1, 2**62, size=n, dtype=np.uint64)
            codes = self._code(self.elements)
            if np.unique(codes).size == self.size:
                break
        self._sorter = np.argsort(codes)
        self._codes = codes[self._sorter]
        self.identity = int(self.index(np.arange(n)[None, :])[0])

    def _code(self, rows: np.ndarray) -> np.ndarray:
        with np.errstate(over="ignore"):
            return (rows.astype(np.uint64) * self._weights).sum(axis=1, dtype=np.uint64)

    def index(self, rows: np.ndarray) -> np.ndarray:
        pos = np.searchsorted(self._codes, self._code(rows))
        pos = np.minimum(pos, self.size - 1)
        idx = self._sorter[pos]
        if not (self.elements[idx] == rows).all():
            raise ValueError("rows are not elements of the group")
        return idx

    def index_of(self, p: Permutation) -> int:
        return int(self.index(np.array([p.images]))[0])

    def permutation(self, i: int) -> Permutation:
        return Permutation(self.degree, tuple(int(x) for x in self.elements[i]))

    @cached_property
    def mul(self) -> np.ndarray:
        """``mul[a, b]`` is the index of ``a * b`` (apply a, then b)."""
        dtype = np.int16 if self.size < 2**15 else np.int32
        table = np.empty((self.size, self.size), dtype=dtype)
        for a in range(self.size):
            # (a*b)(x) = b(a(x))
            table[a] = self.index(self.elements[:, self.elements[a]])
        return table

    @cached_property
    def inv(self) -> np.ndarray:
        return np.argmax(self.mul == self.identity, axis=1)

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.ones(self.size, dtype=np.int64)
        cur = np.arange(self.size)
        k = 1
        pending = cur != self.identity
        while pending.any():
            cur = self.mul[cur, np.arange(self.size)]
            k += 1
            hit = pending & (cur == self.identity)
            orders[hit] = k
            pending &= ~hit
        return orders

    def cyclic(self, x: int) -> np.ndarray:
        seen = [x]
        cur = x
        while cur != self.identity:
            cur = int(self.mul[cur, x])
            seen.append(cur)
        return np.sort(np.array(seen))

    def closure(self, members: np.ndarray, gens: Sequence[int]) -> np.ndarray:
        """Sorted indices of the subgroup generated by ``members`` and ``gens``."""
        inside = np.zeros(self.size, dtype=bool)
        inside[members] = True
        inside[self.identity] = True
        gens = np.asarray(sorted(set(int(g) for g in gens)), dtype=np.intp)
        frontier = np.flatnonzero(inside)
        while frontier.size:
            prods = self.mul[frontier[:, None], gens[None, :]].ravel()
            prods = np.unique(prods[~inside[prods]])
            inside[prods] = True
            frontier = prods
        return np.flatnonzero(inside)

    @cached_property
    def conj(self) -> np.ndarray:
        """``conj[g, x]`` is the index of ``g^-1 * x * g``."""
        left = self.mul[self.inv]  # row g: g^-1 * x
        out = np.empty_like(self.mul)
        for g in range(self.size):
            out[g] = self.mul[left[g], g]
        return out

    def key(self, indices: np.ndarray) -> str:
        rows = self.elements[np.sort(indices)].astype(np.int32)
        h = hashlib.sha256()
        h.update(np.int32(self.degree).tobytes())
        h.update(rows.tobytes())
        return h.hexdigest()


# -- subgroup sets -----------------------------------------------------------

@dataclass
class Subgroup:
    id: int
    order: int
    indices: np.ndarray
    generators: list[int]
    key: str
    table: ElementTable = field(repr=False)

    @cached_property
    def chain(self) -> StabilizerChain:
        gens = [self.table.permutation(i) for i in self.generators]
        return build_chain(GeneratedGroup(self.table.degree, gens))

    def permutations(self) -> list[Permutation]:
        return [self.table.permutation(i) for i in self.indices]

    @property
    def generator_perms(self) -> list[Permutation]:
        return [self.table.permutation(i) for i in self.generators]


@dataclass
class SubgroupSet:
    ambient: GeneratedGroup
    table: ElementTable
    members: list[Subgroup]

    @property
    def order(self) -> int:
        return self.table.size

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> Subgroup:
        return self.members[i]

    @cached_property
    def membership(self) -> np.ndarray:
        """Boolean ``(subgroups, elements)`` incidence matrix."""
        m = np.zeros((len(self.members), self.table.size), dtype=bool)
        for s in self.members:
            m[s.id, s.indices] = True
        return m

    def keys(self) -> set[str]:
        return {s.key for s in self.members}

    def find(self, perms: Iterable[Permutation]) -> Subgroup:
        """The member generated by ``perms``."""
        idx = [self.table.index_of(p) for p in perms]
        target = self.table.key(self.table.closure(np.array(idx, dtype=np.intp), idx))
        for s in self.members:
            if s.key == target:
                return s
        raise KeyError("not a non-trivial proper subgroup")

    def prime_order(self) -> list[Subgroup]:
        return [s for s in self.members if _is_prime(s.order)]


def all_subgroups(g: GeneratedGroup, group_budget: int = DEFAULT_GROUP_BUDGET,
                  lattice_budget: int = DEFAULT_LATTICE_BUDGET) -> SubgroupSet:
    """Every non-trivial proper subgroup of ``g``.

    Seeds with the cyclic subgroups and closes under joins with cyclic
    subgroups of prime-power order (which generate every cyclic subgroup).
    Joins are taken from one representative per conjugacy class; each new
    class is expanded in full, so the result is the complete lattice.
    """
    table = ElementTable(g, group_budget)
    size = table.size
    found: dict[bytes, tuple[np.ndarray, list[int]]] = {}
    reps: list[tuple[np.ndarray, list[int]]] = []

    def fingerprint(ix):
        mask = np.zeros(size, dtype=bool)
        mask[ix] = True
        return np.packbits(mask).tobytes()

    def add_class(ix: np.ndarray, gens: list[int]):
        conj = table.conj[:, ix]
        conj.sort(axis=1)
        uniq, first = np.unique(conj, axis=0, return_index=True)
        for row, gi in zip(uniq, first):
            fp = fingerprint(row)
            if fp not in found:
                found[fp] = (row.astype(np.intp), [int(table.conj[gi, x]) for x in gens])
                if len(found) > lattice_budget:
                    raise BudgetExceeded(f"more than {lattice_budget} subgroups")
        reps.append((ix, gens))

    seeds = []
    seen = set()
    for x in range(size):
        if x == table.identity:
            continue
        cyc = table.cyclic(x)
        fp = fingerprint(cyc)
        if fp in seen:
            continue
        seen.add(fp)
        seeds.append((cyc, x))
    joiners = [x for cyc, x in seeds if _prime_power(cyc.size)]
    whole = size

    for cyc, x in seeds:
        if cyc.size < whole and fingerprint(cyc) not in found:
            add_class(cyc, [x])

    i = 0
    while i < len(reps):
        ix, gens = reps[i]
        i += 1
        inside = np.zeros(size, dtype=bool)
        inside[ix] = True
        for y in joiners:
            if inside[y]:
                continue
            new = table.closure(ix, gens + [y])
            if new.size == whole:
                continue
            if fingerprint(new) in found:
                continue
            add_class(new, gens + [y])

    members = []
    entries = sorted(found.values(), key=lambda e: (e[0].size, e[0].tolist()))
    for sid, (ix, gens) in enumerate(entries):
        members.append(Subgroup(sid, int(ix.size), ix, _trim_generators(table, ix, gens), table.key(ix), table))
    return SubgroupSet(g, table, members)


def _trim_generators(table: ElementTable, ix: np.ndarray, gens: list[int]) -> list[int]:
    """Drop redundant generators, keeping the list small for chain building."""
    kept: list[int] = []
    current = np.array([table.identity])
    for x in gens:
        if x in set(current.tolist()):
            continue
        kept.append(x)
        current = table.closure(current, kept)
        if current.size == ix.size:
            break
    return kept


def prime_order_subgroups(g: GeneratedGroup, budget: int = DEFAULT_ELEMENT_BUDGET) -> list[StabilizerChain]:
    """One chain per distinct proper subgroup ``<x>`` with ``|x|`` prime."""
    chain = build_chain(g)
    if chain.order > budget:
        raise BudgetExceeded(f"group order {chain.order} exceeds budget {budget}")
    out = []
    seen = set()
    for block in element_blocks(chain):
        for row in block.tolist():
            p = Permutation(g.degree, tuple(row))
            k = p.order
            if not _is_prime(k) or k == chain.order:
                continue
            powers = [p]
            q = p
            for _ in range(k - 2):
                q = q * p
                powers.append(q)
            key = min(x.images for x in powers)
            if key in seen:
                continue
            seen.add(key)
            out.append(build_chain(GeneratedGroup(g.degree, [p])))
    return out

