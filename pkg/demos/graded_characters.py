"""Graded characters: Hilbert series, character inversion, and the
divided-power projective.

Run:  python3 demos/graded_characters.py
"""

from qklr.rootdata import CartanDatum
from qklr.klr import ScalarsChoice
from qklr.klrchar import hilbert_full, chi_solve, mj_check, CharVector


def main():
    d = CartanDatum.from_type("A2")
    print("== closed-form Hilbert series of e(nu')R(beta)e(nu) ==")
    for nu, nup in (((1,), (1,)), ((1, 2), (1, 2)), ((1, 2), (2, 1))):
        print(f"  {nup} <- {nu}: {hilbert_full(d, nu, nup)!r}")

    print("\n== character inversion: R(alpha_1) gives back f_1 ==")
    f = hilbert_full(d, (1,), (1,))
    c = CharVector(d, d.alpha(1), 0, {(1,): {}}, closed={(1,): f})
    print(f"  chi_solve = {chi_solve(c)!r}")

    print("\n== character of the divided-power projective (B2) ==")
    b2 = CartanDatum.from_type("B2")
    sc = ScalarsChoice.default(b2)
    for i, j in ((1, 2), (2, 1)):
        r = mj_check(b2, sc, i, j, max_degree=16)
        print(f"  i = {i}, j = {j}: shift = {r['shift']}, "
              f"exact = {r['exact']}, matches ad power = {r['chi_matches']}")
        print(f"    chi = {r['chi']!r}")


if __name__ == "__main__":
    main()
