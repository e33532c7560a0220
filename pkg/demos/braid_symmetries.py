"""Walk through the braid symmetries T_i on small Cartan data.

Run:  python3 demos/braid_symmetries.py
"""

from qklr.rootdata import CartanDatum
from qklr.uqfull import TriangularElem, apply_ti, apply_braid, equals
from qklr.braidsym import delta_char


def main():
    d = CartanDatum.from_type("A2")
    print("== T_i on its own generators (A2) ==")
    for g, name in ((TriangularElem.e_gen(d, 1), "e1"),
                    (TriangularElem.f_gen(d, 1), "f1")):
        print(f"  T_1({name}) = {apply_ti(1, g)!r}")

    print("\n== braid relation, h = 3 (A2) ==")
    f1 = TriangularElem.f_gen(d, 1)
    lhs = apply_braid([1, 2, 1], f1)
    rhs = apply_braid([2, 1, 2], f1)
    print(f"  T_1T_2T_1(f1) = {lhs!r}")
    print(f"  T_2T_1T_2(f1) = {rhs!r}")
    print(f"  equal: {equals(lhs, rhs)}")

    print("\n== reduced-word independence of T_w(f_i) (A3) ==")
    a3 = CartanDatum.from_type("A3")
    u = delta_char(a3, (1, 2, 1), 3)
    v = delta_char(a3, (2, 1, 2), 3)
    print(f"  word (1,2,1): {u!r}")
    print(f"  word (2,1,2): {v!r}")
    print(f"  equal: {u == v}")


if __name__ == "__main__":
    main()
