"""Distance certificates for pairs of prime-order cyclic subgroups.

A certificate reduces a distance claim in a large group to mechanical facts:
containments checked by sifting, the order of the join of the pair, and
pairwise intersections of listed maximal overgroups.  The one thing that is
not checked is that the overgroup lists are complete; each list carries a
``completeness`` tag (``cited``, ``computed`` or ``assumed``) that is copied
into the certificate.
"""
from __future__ import annotations

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

from .chain import (DEFAULT_ELEMENT_BUDGET, GeneratedGroup, StabilizerChain, TrivialityReport,
                    build_chain, intersect_trivial, is_member, join)
from .lattice import _is_prime
from .perm import (Permutation, compose, conjugate, cycle_conjugator, parse_cycles, power, render,
                   standard_cycle, transposition)

DATA_DIR = Path(__file__).parent / "data"

DISTANCE_0 = "distance = 0"
DISTANCE_LE2 = "distance <= 2"
DISTANCE_3 = "distance = 3"
DISTANCE_GE4 = "distance >= 4 conditional"
DISTANCE_4 = "distance = 4 conditional"
UNDETERMINED = "undetermined"

COMPLETENESS = ("cited", "computed", "assumed")


class WitnessError(ValueError):
    """Malformed witness file."""


# -- arithmetic criteria ----------------------------------------------------

def order_product_forces_intersection(o1: int, o2: int, order: int) -> bool:
    """True iff any two subgroups of orders ``o1`` and ``o2`` must meet non-trivially.

    ``|H1 H2| = |H1||H2| / |H1 ∩ H2| <= |G|``, so ``o1 * o2 > |G|`` forces a
    non-trivial intersection.
    """
    for o in (o1, o2):
        if o < 1 or order % o:
            raise ValueError(f"{o} does not divide the group order {order}")
    return o1 * o2 > order


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


def projective_representations(n: int) -> list[tuple[int, int]]:
    """All ``(q, d)`` with ``q`` a prime power, ``d >= 2`` and ``(q^d - 1)/(q - 1) == n``."""
    reps = []
    max_d = int(math.log2(n + 1)) + 1
    for q in range(2, n + 1):
        if not _is_prime_power(q):
            continue
        for d in range(2, max_d + 1):
            v = (q**d - 1) // (q - 1)
            if v == n:
                reps.append((q, d))
            if v >= n:
                break
    return reps


@dataclass
class Admissibility:
    n: int
    admissible: bool
    reason: str
    representations: list[tuple[int, int]] = field(default_factory=list)

    def __bool__(self):
        return self.admissible


def is_theorem2_prime(n: int) -> Admissibility:
    """Whether ``A_n`` falls under the prime-degree diameter-4 family.

    ``n`` must be prime, different from 11, and not of the form
    ``(q^d - 1)/(q - 1)`` for a prime power ``q`` and ``d >= 2``.
    """
    if n < 2 or not _is_prime(n):
        return Admissibility(n, False, f"{n} is not prime")
    if n == 11:
        return Admissibility(n, False, "11 is excluded explicitly (M_11 overgroups)")
    reps = projective_representations(n)
    if reps:
        forms = ", ".join(f"({q}^{d}-1)/({q}-1)" for q, d in reps)
        return Admissibility(n, False, f"{n} = {forms}", reps)
    return Admissibility(n, True, f"{n} is prime, not 11, and not (q^d-1)/(q-1)")


# -- normalizers of prime cycles --------------------------------------------

def _mult_order(r: int, n: int) -> int:
    k, x = 1, r % n
    while x != 1:
        x = x * r % n
        k += 1
    return k


def multiplier_permutation(n: int, r: int) -> Permutation:
    """``x -> r*x (mod n)`` on the points of the standard cycle (point ``i+1`` is residue ``i``)."""
    return Permutation(n, tuple(r * x % n for x in range(n)))


def _cycle_normalizer(n: int, g: Permutation, index: int, label: str | None) -> StabilizerChain:
    if not _is_prime(n):
        raise ValueError(f"{n} is not prime")
    if g.degree != n or g.cycle_type() != (n,):
        raise ValueError(f"{render(g)} is not an {n}-cycle of degree {n}")
    want = (n - 1) // index
    r = next(r for r in range(2, n) if _mult_order(r, n) == want) if n > 2 else 1
    std = standard_cycle(n)
    h = multiplier_permutation(n, r)
    if conjugate(std, h) != power(std, r):
        raise AssertionError("multiplier does not normalize the standard cycle")
    tau = cycle_conjugator(std, g)
    gens = [g, conjugate(h, tau)]
    return build_chain(GeneratedGroup(n, gens, label or f"N({render(g)})"))


def build_cycle_normalizer(n: int, g: Permutation, label: str | None = None) -> StabilizerChain:
    """The normalizer ``n:(n-1)/2`` of ``<g>`` in ``A_n`` for an ``n``-cycle ``g``, ``n`` an odd prime.

    The extra generator multiplies residues by the least ``r`` of
    multiplicative order ``(n-1)/2``; it is a product of two ``(n-1)/2``-cycles
    and therefore even.
    """
    if n < 3:
        raise ValueError("need an odd prime")
    c = _cycle_normalizer(n, g, 2, label)
    assert c.order == n * (n - 1) // 2
    assert all(p.is_even for p in c.generators)
    return c


def symmetric_cycle_normalizer(n: int, g: Permutation) -> StabilizerChain:
    """The full normalizer ``n:(n-1)`` of ``<g>`` in ``S_n``."""
    return _cycle_normalizer(n, g, 1, None)


# -- witnesses ------------------------------------------------------------

@dataclass
class Overgroup:
    label: str
    generators: list[Permutation]
    claimed_order: int | None = None
    completeness: str = "assumed"
    provenance: str = ""

    def to_dict(self) -> dict:
        return {"label": self.label,
                "generators": [render(p) for p in self.generators],
                "claimed_order": self.claimed_order,
                "completeness": self.completeness,
                "provenance": self.provenance}


@dataclass
class WitnessCase:
    name: str
    degree: int
    g_a: Permutation
    g_b: Permutation
    overgroups_a: list[Overgroup]
    overgroups_b: list[Overgroup]
    ambient: str = "alternating"
    ambient_generators: list[Permutation] = field(default_factory=list)
    claim: str | None = None
    notes: str = ""

    def ambient_group(self) -> GeneratedGroup:
        if self.ambient == "alternating":
            from .lattice import catalog
            return catalog("alternating", self.degree)
        return GeneratedGroup(self.degree, list(self.ambient_generators), "G")

    def to_dict(self) -> dict:
        amb = {"type": self.ambient}
        if self.ambient != "alternating":
            amb["generators"] = [render(p) for p in self.ambient_generators]
        return {"name": self.name,
                "degree": self.degree,
                "ambient": amb,
                "pair": {"g_a": render(self.g_a), "g_b": render(self.g_b)},
                "overgroups_a": [o.to_dict() for o in self.overgroups_a],
                "overgroups_b": [o.to_dict() for o in self.overgroups_b],
                "claim": self.claim,
                "notes": self.notes}

    def conjugated(self, s: Permutation) -> WitnessCase:
        """The same witness relabelled by ``s``."""
        def og(o):
            return Overgroup(o.label, [conjugate(p, s) for p in o.generators], o.claimed_order,
                             o.completeness, o.provenance)
        return WitnessCase(self.name, self.degree, conjugate(self.g_a, s), conjugate(self.g_b, s),
                           [og(o) for o in self.overgroups_a], [og(o) for o in self.overgroups_b],
                           self.ambient, [conjugate(p, s) for p in self.ambient_generators],
                           self.claim, self.notes)


def witness_from_dict(d: dict) -> WitnessCase:
    try:
        degree = int(d["degree"])
        amb = d.get("ambient", {"type": "alternating"})
        kind = amb.get("type", "alternating")
        if kind not in ("alternating", "generators"):
            raise WitnessError(f"unknown ambient type {kind!r}")
        amb_gens = [parse_cycles(s, degree) for s in amb.get("generators", [])]

        def og(o):
            comp = o.get("completeness", "assumed")
            if comp not in COMPLETENESS:
                raise WitnessError(f"bad completeness tag {comp!r}")
            claimed = o.get("claimed_order")
            return Overgroup(o["label"], [parse_cycles(s, degree) for s in o["generators"]],
                             None if claimed is None else int(claimed), comp, o.get("provenance", ""))

        return WitnessCase(d["name"], degree,
                           parse_cycles(d["pair"]["g_a"], degree), parse_cycles(d["pair"]["g_b"], degree),
                           [og(o) for o in d.get("overgroups_a", [])], [og(o) for o in d.get("overgroups_b", [])],
                           kind, amb_gens, d.get("claim"), d.get("notes", ""))
    except WitnessError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise WitnessError(f"malformed witness: {exc}") from exc


def load_witness(path) -> WitnessCase:
    with open(path, encoding="utf-8") as fh:
        return witness_from_dict(json.load(fh))


def save_witness(w: WitnessCase, path):
    Path(path).write_text(json.dumps(w.to_dict(), indent=2) + "\n", encoding="utf-8")


def shipped_witness(name: str) -> WitnessCase:
    return load_witness(DATA_DIR / f"{name}.json")


# -- certificates ------------------------------------------------------------

@dataclass
class Fact:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self):
        return {"fact": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class Certificate:
    case: str
    claim: str | None
    conclusion: str = UNDETERMINED
    facts: list[Fact] = field(default_factory=list)
    join_order: int | None = None
    ambient_order: int | None = None
    intersections: list[dict] = field(default_factory=list)
    assumptions: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def failed(self) -> list[Fact]:
        return [f for f in self.facts if not f.ok]

    @property
    def verified(self) -> bool:
        """All facts hold and the conclusion matches the claim (if one was made)."""
        return not self.failed and self.conclusion != UNDETERMINED and (
            self.claim is None or self.claim == self.conclusion)

    def fact(self, name: str, ok: bool, detail: str = "") -> bool:
        self.facts.append(Fact(name, bool(ok), detail))
        return bool(ok)

    def to_dict(self, timings: bool = True) -> dict:
        d = {"case": self.case,
             "claim": self.claim,
             "conclusion": self.conclusion,
             "verified": self.verified,
             "failed_facts": [f.name for f in self.failed],
             "ambient_order": self.ambient_order,
             "join_order": self.join_order,
             "facts": [f.to_dict() for f in self.facts],
             "intersections": self.intersections,
             "assumptions": self.assumptions,
             "flags": self.flags}
        if timings:
            d["timings"] = {k: round(v, 3) for k, v in self.timings.items()}
        return d

    def render(self) -> str:
        lines = [f"case:        {self.case}",
                 f"claim:       {self.claim}",
                 f"conclusion:  {self.conclusion}",
                 f"verified:    {'yes' if self.verified else 'NO'}",
                 f"|G|:         {self.ambient_order}",
                 f"|<g_a,g_b>|: {self.join_order}"]
        lines.append("facts:")
        for f in self.facts:
            lines.append(f"  [{'ok' if f.ok else 'FAIL'}] {f.name}" + (f": {f.detail}" if f.detail else ""))
        if self.intersections:
            lines.append("overgroup intersections:")
            for r in self.intersections:
                verdict = "trivial" if r["trivial"] else f"non-trivial ({r['witness'] or r['method']})"
                lines.append(f"  {r['a']} & {r['b']}: {verdict} [{r['method']}]")
        for a in self.assumptions:
            lines.append(f"assumes: {a}")
        for f in self.flags:
            lines.append(f"flag: {f}")
        if self.timings:
            lines.append("timings: " + ", ".join(f"{k}={v:.2f}s" for k, v in self.timings.items()))
        return "\n".join(lines)


def _weakest(tags: list[str]) -> str:
    return max(tags, key=COMPLETENESS.index) if tags else "assumed"


def distance_class(w: WitnessCase, budget: int = DEFAULT_ELEMENT_BUDGET, threads: int = 1) -> Certificate:
    """Classify the distance between ``<g_a>`` and ``<g_b>`` in the intersection graph.

    Rules, in order: equal subgroups give 0; a proper join gives at most 2;
    a non-trivial intersection between some overgroup of ``A`` and some
    overgroup of ``B`` gives 3; otherwise the distance is at least 4, provided
    the overgroup lists are the complete lists of maximal overgroups.
    """
    cert = Certificate(w.name, w.claim)
    t0 = time.perf_counter()
    amb = w.ambient_group()
    amb_chain = build_chain(amb)
    G = amb_chain.order
    cert.ambient_order = G

    pair_ok = True
    for tag, g in (("g_a", w.g_a), ("g_b", w.g_b)):
        pair_ok &= cert.fact(f"{tag} has prime order", _is_prime(g.order), f"order {g.order}")
        if w.ambient == "alternating":
            pair_ok &= cert.fact(f"{tag} is even", g.is_even, g.parity)
        else:
            pair_ok &= cert.fact(f"{tag} lies in G", is_member(amb_chain, g))
    cert.timings["ambient"] = time.perf_counter() - t0

    t = time.perf_counter()
    A = build_chain(GeneratedGroup(w.degree, [w.g_a], "A"))
    same = w.g_a.order == w.g_b.order and is_member(A, w.g_b)
    if pair_ok and same:
        cert.conclusion = DISTANCE_0
        cert.flags.append("g_b generates the same subgroup as g_a")
        cert.timings["join"] = time.perf_counter() - t
        cert.timings["total"] = time.perf_counter() - t0
        return cert
    J = join(A.to_group(), [w.g_b])
    cert.join_order = J.order
    cert.timings["join"] = time.perf_counter() - t
    if pair_ok and J.order < G:
        cert.conclusion = DISTANCE_LE2
        cert.timings["total"] = time.perf_counter() - t0
        return cert
    cert.fact("<g_a, g_b> = G", J.order == G, f"|<g_a,g_b>| = {J.order}, |G| = {G}")

    t = time.perf_counter()
    chains: dict[str, list[tuple[Overgroup, StabilizerChain]]] = {"a": [], "b": []}
    over_ok = True
    for side, g, lst in (("a", w.g_a, w.overgroups_a), ("b", w.g_b, w.overgroups_b)):
        over_ok &= cert.fact(f"overgroups_{side} non-empty", bool(lst))
        for o in lst:
            c = build_chain(GeneratedGroup(w.degree, o.generators, o.label))
            chains[side].append((o, c))
            over_ok &= cert.fact(f"{o.label} contains g_{side}", is_member(c, g))
            if o.claimed_order is not None:
                over_ok &= cert.fact(f"{o.label} has order {o.claimed_order}", c.order == o.claimed_order,
                                     f"chain order {c.order}")
            over_ok &= cert.fact(f"{o.label} is a proper subgroup of G",
                                 c.order < G and all(is_member(amb_chain, p) for p in o.generators),
                                 f"order {c.order}")
    cert.timings["overgroups"] = time.perf_counter() - t
    if not (pair_ok and over_ok):
        cert.timings["total"] = time.perf_counter() - t0
        return cert

    t = time.perf_counter()
    pairs = sorted(product(chains["a"], chains["b"]), key=lambda ab: (ab[0][0].label, ab[1][0].label))

    def check(ab) -> dict:
        (oa, ca), (ob, cb) = ab
        if order_product_forces_intersection(ca.order, cb.order, G):
            rep = TrivialityReport(False, None, "order-product")
        else:
            rep = intersect_trivial(ca, cb, budget=budget)
        return {"a": oa.label, "b": ob.label, "order_a": ca.order, "order_b": cb.order, **rep.to_dict()}

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            cert.intersections = list(pool.map(check, pairs))
    else:
        cert.intersections = [check(ab) for ab in pairs]
    cert.timings["intersections"] = time.perf_counter() - t

    if any(not r["trivial"] for r in cert.intersections):
        cert.conclusion = DISTANCE_3
    else:
        ca = _weakest([o.completeness for o in w.overgroups_a])
        cb = _weakest([o.completeness for o in w.overgroups_b])
        cert.assumptions.append(f"overgroups_a is the complete list of maximal overgroups of <g_a> ({ca})")
        cert.assumptions.append(f"overgroups_b is the complete list of maximal overgroups of <g_b> ({cb})")
        if w.ambient == "alternating":
            cert.assumptions.append(f"diam of the intersection graph of A_{w.degree} is at most 4 (cited)")
            cert.conclusion = DISTANCE_4
        else:
            cert.conclusion = DISTANCE_GE4
    cert.timings["total"] = time.perf_counter() - t0
    return cert


# -- prime-degree pairs ----------------------------------------------------

def theorem2_witness(n: int) -> WitnessCase:
    """``g_a = (1,...,n)``, ``g_b = g_a`` conjugated by ``(n-1,n)``, each with its normalizer."""
    if not _is_prime(n) or n < 5:
        raise ValueError(f"{n} is not a prime >= 5")
    adm = is_theorem2_prime(n)
    g_a = standard_cycle(n)
    g_b = conjugate(g_a, transposition(n - 1, n, n))
    complete = adm.admissible and n != 23
    tag = "cited" if complete else "assumed"
    prov = ("only maximal subgroup of A_n containing an n-cycle (transitive groups of prime degree)"
            if complete else f"normalizer only; other transitive overgroups exist for n = {n}")
    oa = [Overgroup(f"N(A) {n}:{(n - 1) // 2}", build_cycle_normalizer(n, g_a).generators,
                    n * (n - 1) // 2, tag, prov)]
    ob = [Overgroup(f"N(B) {n}:{(n - 1) // 2}", build_cycle_normalizer(n, g_b).generators,
                    n * (n - 1) // 2, tag, prov)]
    return WitnessCase(f"thm2_n{n}", n, g_a, g_b, oa, ob, claim=DISTANCE_4,
                       notes="g_b = g_a^(n-1,n); the normalizers must meet trivially")


def verify_theorem2_pair(n: int, budget: int = DEFAULT_ELEMENT_BUDGET) -> Certificate:
    adm = is_theorem2_prime(n)
    w = theorem2_witness(n)
    cert = distance_class(w, budget=budget)
    if not adm.admissible:
        cert.flags.append(f"overgroup list incomplete for n = {n}: {adm.reason}")
    elif n == 23:
        cert.flags.append("overgroup list incomplete for n = 23: each 23-cycle also lies in two M_23 copies")
    return cert
