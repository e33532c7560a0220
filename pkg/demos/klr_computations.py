"""Quiver Hecke algebra computations: normal forms, idempotents,
cyclotomic nil-Hecke dimensions.

Run:  python3 demos/klr_computations.py
"""

from qklr.rootdata import CartanDatum, RootVec
from qklr.klr import (ScalarsChoice, KLRElem, klr_mul, relations_check,
                      special_idempotent, projisom_maps)
from qklr.klrchar import cyclotomic_nilhecke


def main():
    d = CartanDatum.from_type("A2")
    sc = ScalarsChoice.default(d)
    beta = RootVec(d, {1: 1, 2: 1})

    print("== the quadratic crossing relation on R(alpha_1 + alpha_2) ==")
    tau = KLRElem.tau_gen(d, sc, beta, 1)
    e12 = KLRElem.idem(d, sc, (1, 2))
    print(f"  tau_1^2 e(12) = {klr_mul(klr_mul(tau, tau), e12)!r}")

    print("\n== defining relations in the polynomial representation ==")
    r = relations_check(d, sc, RootVec(d, {1: 2, 2: 1}), samples=20)
    print(f"  checks = {r['checks']}, failures = {len(r['failures'])}")

    print("\n== divided-power idempotents ==")
    for n in (2, 3):
        b = special_idempotent(d, sc, "b+", n, 1)
        print(f"  n = {n}: b^2 == b is {klr_mul(b, b) == b}")
    r = projisom_maps(d, sc, 2, 1)
    print(f"  dot/crossing module isomorphisms: "
          f"element identities = {r['element_identities']}, "
          f"failures = {len(r['failures'])}")

    print("\n== cyclotomic nil-Hecke modules ==")
    for l, n in ((1, 2), (3, 2), (3, 3)):
        r = cyclotomic_nilhecke(l, n)
        if r["result"] == "ZERO":
            print(f"  l = {l}, n = {n}: ZERO "
                  f"({r['certificate']['statement']})")
        else:
            print(f"  l = {l}, n = {n}: dims = {r['dims']} "
                  f"(total {r['total_dim']})")


if __name__ == "__main__":
    main()
