"""Parabolic highest-weight modules: weight-space dimensions and the
contravariant form.

Run:  python3 demos/parabolic_modules.py
"""

from qklr.rootdata import CartanDatum, RootVec
from qklr.parabolic import vj_slice, vj_act, vj_form, weyl_dim_oracle, \
    dims_csv


def main():
    d = CartanDatum.from_type("A2")
    lam = d.fundamental_weight(1)
    J = frozenset(d.I)

    print("== V_I(Lambda_1) over A2: the 3-dimensional representation ==")
    print(dims_csv(d, J, lam, 2))

    print("== dimensions against the Weyl-character recursion (B2) ==")
    b2 = CartanDatum.from_type("B2")
    lam2 = b2.fundamental_weight(2)
    for h1 in range(3):
        for h2 in range(3):
            beta = RootVec(b2, {1: h1, 2: h2})
            dim = vj_slice(b2, frozenset(b2.I), lam2, beta).dim
            oracle = weyl_dim_oracle(b2, lam2, beta)
            print(f"  beta = ({h1},{h2})  dim = {dim}  oracle = {oracle}")

    print("\n== contravariant form on a weight space ==")
    v0 = vj_slice(d, J, lam, d.zero_root()).highest_vector()
    v = vj_act("f", 1, v0)
    print(f"  (f_1 v, f_1 v) = {vj_form(v, v)!r}")


if __name__ == "__main__":
    main()
