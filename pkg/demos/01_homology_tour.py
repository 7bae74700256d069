"""Integral homology of small groups, computed three ways.

Every group below gets a free resolution over its integer group ring; the
homology of the tensored-down complex is read off through Smith normal
form, so every invariant factor is exact.

Run:  python3 demos/01_homology_tour.py
"""

from tatejoin import (bar_resolution, cyclic, dihedral, homology,
                      periodic_cyclic_resolution, quaternion8, symmetric,
                      syzygy_resolution)


def show(res, top):
    for n in range(1, top + 1):
        print(f"  {homology(res, n)}")


def main():
    print("Cyclic groups alternate: Z/m in odd degrees, zero in even ones.")
    for m in (2, 3, 4, 5, 6):
        res = periodic_cyclic_resolution(m, 6)
        line = ", ".join(repr(homology(res, n).invariant_factors)
                         for n in range(1, 6))
        print(f"  C{m}: degrees 1..5 -> {line}")

    print()
    print("The same answers fall out of the generic bar resolution,")
    print("which works for any finite group but grows like |G|^n:")
    res = bar_resolution(cyclic(4), 4)
    show(res, 3)

    print()
    print("Computed (syzygy-by-syzygy) resolutions keep the ranks small.")
    print("Dihedral group of order 8:")
    show(syzygy_resolution(dihedral(4), 6), 5)
    print("Symmetric group on three letters (4-periodic pattern):")
    show(syzygy_resolution(symmetric(3), 6), 5)
    print("Quaternion group (4-periodic, with H_3 = Z/8):")
    show(syzygy_resolution(quaternion8(), 6), 5)

    print()
    print("H_0 is always Z (one free factor, printed as 0):")
    print(f"  {homology(periodic_cyclic_resolution(3, 2), 0)}")


if __name__ == "__main__":
    main()
