"""Regenerate the shipped group and witness files under src/intersection_graphs/data.

    python scripts/derive_witnesses.py

Each overgroup copy is derived from standard generators: find an n-cycle in
the group by random search, conjugate the group onto the target cycle, then
conjugate by the normalizer of the cycle in S_n and deduplicate.
"""
from __future__ import annotations

from intersection_graphs.certify import (DATA_DIR, DISTANCE_3, DISTANCE_4, Overgroup, WitnessCase,
                                         build_cycle_normalizer, save_witness, theorem2_witness)
from intersection_graphs.chain import GeneratedGroup, build_chain, save_group
from intersection_graphs.derive import (M11_GENERATORS, M23_GENERATORS, PSL33_MATRICES, overgroup_copies,
                                        psl33)
from intersection_graphs.perm import conjugate, parse_cycles, standard_cycle, transposition

DERIVATION = ("conjugated from {src} onto {cyc}: random search for an n-cycle c (seed 0), "
              "explicit conjugator c -> {cyc}, then conjugates under N_S{n}(<{cyc}>) deduplicated; "
              "copy {k} of {total} (index count |N_S{n}| / |N_S{n} & M| = {expected})")


def ship_groups():
    m11 = GeneratedGroup(11, [parse_cycles(s, 11) for s in M11_GENERATORS], "M11")
    m23 = GeneratedGroup(23, [parse_cycles(s, 23) for s in M23_GENERATORS], "M23")
    save_group(m11, DATA_DIR / "m11.json", order=build_chain(m11).order,
               provenance="standard generators of the Mathieu group M11 in its natural action on 11 points")
    save_group(m23, DATA_DIR / "m23.json", order=build_chain(m23).order,
               provenance="standard generators of the Mathieu group M23 in its natural action on 23 points")
    p = psl33()
    save_group(p, DATA_DIR / "psl33_13.json", order=build_chain(p).order,
               provenance="action of SL(3,3) = PSL(3,3) on the 13 points of PG(2,3) (row vectors, "
                          f"first nonzero coordinate 1, in lexicographic order); matrices {PSL33_MATRICES}")
    return m11, m23, p


def copies_for(group, src, g, completeness):
    copies, expected = overgroup_copies(group, g)
    assert len(copies) == expected, (len(copies), expected)
    out = []
    for k, c in enumerate(copies, 1):
        prov = DERIVATION.format(src=src, cyc=str(g), n=g.degree, k=k, total=len(copies), expected=expected)
        out.append(Overgroup(f"{group.label}#{k}", c.generators, c.order, completeness, prov))
    return out


def normalizer_entry(n, g, label):
    c = build_cycle_normalizer(n, g)
    return Overgroup(label, c.generators, c.order, "cited",
                     f"normalizer {n}:{(n - 1) // 2} of <{g}> in A_{n}")


def main():
    m11, m23, p = ship_groups()

    # A_13: 13-cycles lie in PSL(3,3) copies and in their own normalizer 13:6.
    ga = parse_cycles("(1,8,10,13,7,5,6,12,9,11,3,4,2)", 13)
    gb = standard_cycle(13)
    w = WitnessCase(
        "a13_distance4", 13, ga, gb,
        copies_for(p, "psl33_13.json", ga, "computed") + [normalizer_entry(13, ga, "N(A) 13:6")],
        copies_for(p, "psl33_13.json", gb, "computed") + [normalizer_entry(13, gb, "N(B) 13:6")],
        claim=DISTANCE_4,
        notes="maximal overgroups of a 13-cycle in A_13: PSL(3,3) copies (count computed) and 13:6")
    save_witness(w, DATA_DIR / "a13_distance4.json")

    # A_23: each 23-cycle lies in two M_23 copies; its normalizer 23:11 sits inside both.
    ga = parse_cycles("(1,13,16,4,22,2,8,20,21,6,17,9,19,14,18,11,15,23,12,5,3,7,10)", 23)
    gb = standard_cycle(23)
    oa = copies_for(m23, "m23.json", ga, "cited") + [normalizer_entry(23, ga, "N(A) 23:11")]
    ob = copies_for(m23, "m23.json", gb, "cited") + [normalizer_entry(23, gb, "N(B) 23:11")]
    w = WitnessCase("a23_distance4", 23, ga, gb, oa, ob, claim=DISTANCE_4,
                    notes="two M_23 copies per 23-cycle; the normalizers are listed although contained in them")
    save_witness(w, DATA_DIR / "a23_distance4.json")

    # A_11: every 11-cycle lies in an M_11 and 7920^2 > |A_11|.
    ga = standard_cycle(11)
    gb = conjugate(ga, transposition(10, 11, 11))
    w = WitnessCase("a11_diam3_counting", 11, ga, gb,
                    copies_for(m11, "m11.json", ga, "cited"), copies_for(m11, "m11.json", gb, "cited"),
                    claim=DISTANCE_3,
                    notes="any two subgroups of order 7920 in A_11 meet non-trivially (order product)")
    save_witness(w, DATA_DIR / "a11_diam3_counting.json")

    for n in (19, 29):
        save_witness(theorem2_witness(n), DATA_DIR / f"thm2_n{n}.json")


if __name__ == "__main__":
    main()
