"""The quaternion group acts freely on the 3-sphere; its homology says so.

Q8 has 4-periodic homology with H_3 = Z/8, the algebraic shadow of a free
orientation-preserving action on S^3.  For such groups the product of top
periodicity classes is nontrivial, and the shipped fixture resolution makes
the degree-3 pairing land on a generator of H_7.

Run:  python3 demos/04_quaternion_sphere.py
"""

import os

from tatejoin import (composition_product, homology, join_product,
                      load_resolution, quaternion8, syzygy_resolution)
import tatejoin.resolutions

FIXTURE = os.path.join(os.path.dirname(tatejoin.resolutions.__file__),
                       "fixtures", "q8_periodic.json")


def main():
    res = load_resolution(FIXTURE)
    print(f"loaded {res.label}: depth {res.depth}, ranks {res.ranks}")

    print()
    print("the resolution is literally 4-periodic:")
    for k in range(5, res.depth + 1):
        same = res.differential(k) == res.differential(k - 4)
        print(f"  d_{k} == d_{k - 4}: {same}")

    print()
    print("homology through degree 8:")
    for n in range(1, 9):
        print(f"  {homology(res, n)}")

    print()
    h3 = homology(res, 3)
    h7 = homology(res, 7)
    g = h3.generators[0]
    out = join_product(res, 3, g, 3, g)
    alt = composition_product(res, 3, g, 3, g)
    print(f"product of the H_3 generator with itself: class {out} in {h7}")
    print(f"composition pipeline agrees: {out == alt}")
    print(f"order {h7.class_order(out)}: the periodicity class squares to "
          f"a generator")

    print()
    print("the fixture is reproducible from scratch:")
    regen = syzygy_resolution(quaternion8(), 9)
    print(f"  syzygy_resolution(quaternion8(), 9) == fixture: "
          f"{regen == res}")


if __name__ == "__main__":
    main()
