"""Brill-Noether numerics: linear series, limit series, and linkage.

Everything here is bookkeeping with exact integers: the expected
dimension rho, vanishing sequences at the nodes of a tree curve, Euler
characteristics of syzygy bundles, and the residuation arithmetic of
curves linked inside complete intersections.
"""

from mgbar import bn


def main() -> None:
    print("The expected dimension rho(g, r, d) = g - (r+1)(g-d+r)")
    print("------------------------------------------------------")
    for g, r, d in ((22, 6, 25), (14, 6, 18), (23, 6, 26)):
        print(f"  rho({g}, {r}, {d}) = {bn.rho(g, r, d)}")
    print()

    print("Limit linear series: a curve with an elliptic tail")
    print("---------------------------------------------------")
    g = 5
    curve = bn.TreeCurve((g - 1, 1), ((0, 1),))
    main_aspect = bn.LinearSeriesData(
        g - 1, g - 1, 2 * g - 2, (0,) + tuple(range(2, g + 1))
    )
    tail = bn.LinearSeriesData(
        1, g - 1, 2 * g - 2, tuple(range(g - 2, 2 * g - 3)) + (2 * g - 2,)
    )
    ok = bn.limit_series_compatible(curve, (main_aspect, tail))
    print(f"  genus {curve.arithmetic_genus} curve, canonical aspects "
          f"{main_aspect.vanishing} / {tail.vanishing}")
    print(f"  compatible at the node: {ok}")
    print()

    print("Syzygy bundles of the canonical curve (genus 10)")
    print("------------------------------------------------")
    g = 10
    for i in (1, 2, 3):
        bundle = bn.canonical_syzygy_bundle(g).exterior_power(i).tensor(
            bn.canonical_bundle(g).sym_power(2)
        )
        print(f"  wedge^{i}:  mu = {bundle.mu()},  chi = {bundle.euler_char()}")
    print(f"  balanced_rank_check(3) = {bn.balanced_rank_check(3)}")
    print(f"  koszul_threshold(7, 1) = {bn.koszul_threshold(7, 1)}")
    print()

    print("Plane-model counting (Severi feasibility)")
    print("-----------------------------------------")
    for g in (10, 11):
        rep = bn.severi_analyze(g)
        print(f"  g={g}:  d_min={rep.d_min} delta={rep.delta} "
              f"dim_U={rep.dim_U} feasible={rep.feasible}")
    print()

    print("Liaison on complete intersections")
    print("---------------------------------")
    link = bn.liaison_solve(14, 18, 6)
    print(f"  (g=14, d=18, r=6) links to degree {link.d_res}, "
          f"genus {link.g_res} via degree-{link.f} hypersurfaces")
    back = bn.liaison_solve(link.g_res, link.d_res, 6)
    print(f"  residuation is an involution: back to "
          f"(d={back.d_res}, g={back.g_res})")
    print(f"  (g=11, d=14, r=5) -> {bn.liaison_solve(11, 14, 5)!r}")


if __name__ == "__main__":
    main()
