"""
Normalizer pairs of prime degree
================================

Take g_a = (1,2,...,n) and g_b its conjugate by the transposition (n-1,n).
For prime n the only maximal subgroup of A_n holding g_a is usually the
normalizer of <g_a>, of order n(n-1)/2, so the pair sits at distance 4 as
soon as the two normalizers meet trivially. This fails whenever n is 1 mod 4:
the reflection x -> c - x is then even and inverts both cycles.
"""

from intersection_graphs import is_theorem2_prime, verify_theorem2_pair

for n in (13, 17, 19, 23, 29, 31, 37, 41, 43):
    adm = is_theorem2_prime(n)
    cert = verify_theorem2_pair(n)
    meet = next(r for r in cert.intersections if r["a"].startswith("N(A)") and r["b"].startswith("N(B)"))
    status = "trivial" if meet["trivial"] else f"contains {meet['witness']}"
    print(f"n = {n:2d}  n mod 4 = {n % 4}  admissible: {str(bool(adm)):5s}  N(A) & N(B): {status}")
    print(f"        conclusion: {cert.conclusion}")
    for flag in cert.flags:
        print("        flag:", flag)
