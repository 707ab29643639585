"""Descendent integrals: the recursion at work.

correlator_value evaluates <tau_{a_1} ... tau_{a_n}>_g exactly, by the
KdV-style recursion seeded with <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24.
The string and dilaton equations shortcut the common cases.
"""

from fractions import Fraction

from mgbar import psi


def main() -> None:
    print("Classical small cases")
    print("---------------------")
    for g, exps in ((0, (0, 0, 0)), (1, (1,)), (1, (0, 2)), (2, (2, 3))):
        c = psi.Correlator(g, exps)
        taus = " ".join(f"tau_{a}" for a in c.exponents)
        print(f"  <{taus}>_{g} = {psi.correlator_value(c)}")
    print()

    print("One-point values 1/(24^g g!)")
    print("----------------------------")
    for g in range(1, 7):
        print(f"  g={g}:  <tau_{3 * g - 2}>_{g} = {psi.psi_one_point(g)}")
    print()

    print("The string equation in action")
    print("-----------------------------")
    c = psi.Correlator(2, (0, 2, 4))
    reduced = psi.string_reduce(c)
    parts = " + ".join(str(r.exponents) for r in reduced)
    print(f"  <tau_0 tau_2 tau_4>_2 reduces to {parts}")
    total = sum(psi.correlator_value(r) for r in reduced)
    print(f"  both sides: {psi.correlator_value(c)} = {total}")
    print()

    print("Genus-0 closed form (n-3)!/prod(a_i!)")
    print("-------------------------------------")
    for exps in ((1, 1, 1, 0, 0, 0), (3, 0, 0, 0, 0, 0), (2, 1, 0, 0, 0)):
        value = psi.correlator_value(psi.Correlator(0, exps))
        print(f"  a = {exps}:  {value}")
    print()

    print("The boundary-to-lambda ratio bound 60/(g+4)")
    print("-------------------------------------------")
    for g in (2, 4, 22):
        print(f"  g={g:>2}:  {psi.pand_bound(g)}")


if __name__ == "__main__":
    main()
