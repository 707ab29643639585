"""The genus-22 degeneracy-locus computation, step by step.

The headline number: a virtual divisor on the genus-22 moduli space
with slope 17121/2636, strictly below the canonical slope 13/2.  The
coefficients come from pairing the class against two pencils whose
intersection numbers are 21-fold theta integrals over a Picard variety,
evaluated through a Gysin pushforward table.
"""

from fractions import Fraction

from mgbar import divclass, tautring


def main() -> None:
    print("Step 1: theta-degree-21 integrals on the two pencil sides")
    print("---------------------------------------------------------")
    t1 = tautring.degeneracy_total("C1")
    t0 = tautring.degeneracy_total("C0")
    print(f"  side C1: {t1}")
    print(f"  side C0: {t0}")
    print()

    print("Step 2: solve for the divisor coefficients")
    print("------------------------------------------")
    a, b0, b1 = tautring.solve_d22()
    print(f"  40*b1       = {40 * b1}  (matches side C1)")
    print(f"  42*b0 - b1  = {42 * b0 - b1}  (matches side C0)")
    print(f"  a = 12*b0 - b1 = {a}")
    print()

    print("Step 3: the class and its slope")
    print("-------------------------------")
    d = divclass.d22_class()
    print(f"  D = {d}")
    slope = divclass.slope(d)
    print(f"  slope(D) = {slope} = {float(slope):.5f}")
    print()

    canonical = divclass.slope(divclass.canonical_coarse(22))
    print(f"  canonical slope 13/2 = {float(canonical):.5f}")
    print(f"  slope(D) < 13/2?  {slope < canonical}")
    bound = divclass.slope_conjecture_bound(22)
    print(f"  threshold 6+12/23 = {float(bound):.5f}")
    print(f"  slope(D) < threshold?  {slope < bound}"
          "   (so D meets the K3 locus)")


if __name__ == "__main__":
    main()
