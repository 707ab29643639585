"""Tour of divisor classes and their slopes.

A divisor class here is a vector a*lambda - sum b_j*delta_j; its slope
a/min(b_j) is the single number that decides most of the geometry.  This
script builds the standard classes and compares their slopes to the
6 + 12/(g+1) threshold.
"""

from fractions import Fraction

from mgbar import divclass


def main() -> None:
    print("Canonical classes")
    print("-----------------")
    for g in (3, 4, 10, 22):
        k = divclass.canonical_coarse(g)
        print(f"  g={g:>2}:  {k}")
        print(f"         slope = {divclass.slope(k)}")
    print()

    print("The moving-curve threshold 6 + 12/(g+1)")
    print("---------------------------------------")
    for g in (10, 21, 22, 23):
        bound = divclass.slope_conjecture_bound(g)
        print(f"  g={g:>2}:  {bound} = {float(bound):.5f}")
    print()

    print("Syzygy-defect classes in odd genus g = 2i+3")
    print("-------------------------------------------")
    for i in (0, 1, 2, 10):
        d = divclass.koszul_odd_class(i)
        g = 2 * i + 3
        print(f"  i={i:>2} (g={g:>2}):  slope {divclass.slope(d)}"
              f"   vs threshold {divclass.slope_conjecture_bound(g)}")
    print()

    print("Even-genus syzygy slopes and Gieseker-Petri slopes")
    print("--------------------------------------------------")
    print(f"  koszul_even_slope(0) = {divclass.koszul_even_slope(0)}")
    print(f"  koszul_even_slope(2) = {divclass.koszul_even_slope(2)}")
    for r, s in ((1, 1), (2, 2), (1, 2)):
        print(f"  gieseker_petri_slope({r},{s}) = "
              f"{divclass.gieseker_petri_slope(r, s)}")
    print()

    print("Pairing against test curves (genus 22)")
    print("--------------------------------------")
    d = divclass.d22_class()
    for kind in ("C0", "C1", "R"):
        curve = divclass.test_curve(kind, 22)
        print(f"  <{kind}, D> = {divclass.pair(curve, d)}")
    print()
    print(f"  k3_obstruction(D) = {divclass.k3_obstruction(d)}")
    print(f"  general_type_witness(D) = {divclass.general_type_witness(d)}")


if __name__ == "__main__":
    main()
