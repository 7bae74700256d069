"""Group tables, named families, and group-ring arithmetic.

Expected values are frozen from hand computations small enough to redo in
your head (convolution products over C_2 and C_3, the quaternion signs).
"""

import json

import pytest

from tatejoin import (FiniteGroup, GroupError, GroupRingElement, SchemaError,
                      augmentation, build_group, cyclic, dihedral,
                      from_permutations, norm_element, quaternion8, symmetric,
                      trivial)


def test_cyclic_table():
    g = cyclic(4)
    assert g.order == 4
    assert g.mul(1, 2) == 3
    assert g.mul(3, 2) == 1
    assert g.inv(1) == 3
    assert g.inv(0) == 0


def test_trivial_group():
    g = trivial()
    assert g.order == 1
    assert g.mul(0, 0) == 0


def test_dihedral_relations():
    # element i + n*j is r^i s^j; check s^2 = e and s r s = r^-1
    g = dihedral(4)
    assert g.order == 8
    s = 4
    r = 1
    assert g.mul(s, s) == 0
    assert g.mul(g.mul(s, r), s) == g.inv(r)


def test_symmetric_order_and_center():
    g = symmetric(3)
    assert g.order == 6
    center = [a for a in range(6)
              if all(g.mul(a, b) == g.mul(b, a) for b in range(6))]
    assert center == [0]


def test_quaternion_relations():
    g = quaternion8()
    # index order 1,-1,i,-i,j,-j,k,-k: i*i = -1, i*j = k, j*i = -k
    one, minus, i, j, k = 0, 1, 2, 4, 6
    assert g.mul(i, i) == minus
    assert g.mul(i, j) == k
    assert g.mul(j, i) == g.inv(k)
    assert g.mul(minus, minus) == one


def test_from_permutations_s3():
    g = from_permutations(3, [[1, 0, 2], [1, 2, 0]])
    assert g.order == 6


def test_from_permutations_rejects_non_permutation():
    with pytest.raises(GroupError):
        from_permutations(3, [[0, 0, 2]])


def test_bad_table_rejected():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [1, 1]])  # second row not a bijection


def test_non_associative_table_rejected():
    # a latin square that is not a group table
    t = [[0, 1, 2, 3, 4],
         [1, 0, 3, 4, 2],
         [2, 4, 0, 1, 3],
         [3, 2, 4, 0, 1],
         [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError):
        FiniteGroup(t)


def test_build_group_specs():
    assert build_group("cyclic:5").order == 5
    assert build_group("dihedral:3").order == 6
    assert build_group("sym:4").order == 24
    assert build_group("q8").order == 8
    assert build_group("trivial").order == 1
    with pytest.raises(SchemaError):
        build_group("frieze:7")
    with pytest.raises(SchemaError):
        build_group("cyclic:x")


def test_build_group_from_files(tmp_path):
    table = tmp_path / "c3.json"
    table.write_text(json.dumps(cyclic(3).to_json()))
    assert build_group(f"file:{table}").order == 3

    perms = tmp_path / "v4.json"
    perms.write_text(json.dumps({
        "degree": 4, "label": "V4",
        "generators": [[1, 0, 3, 2], [2, 3, 0, 1]]}))
    g = build_group(f"file:{perms}")
    assert g.order == 4
    assert g.label == "V4"
    assert all(g.mul(a, a) == 0 for a in range(4))


def test_group_json_round_trip():
    g = dihedral(3)
    assert FiniteGroup.from_json(g.to_json()) == g


def test_group_json_schema_errors():
    with pytest.raises(SchemaError):
        FiniteGroup.from_json({"generators": [[1, 0]]})  # missing degree
    with pytest.raises(SchemaError):
        FiniteGroup.from_json({"order": 3, "table": [[0]]})


# -- group ring ---------------------------------------------------------------

def test_ring_multiply_c3():
    # (e + t)(e + t^2) = e + t^2 + t + e = 2e + t + t^2
    g = cyclic(3)
    a = GroupRingElement(g, [1, 1, 0])
    b = GroupRingElement(g, [1, 0, 1])
    assert (a * b).c == (2, 1, 1)


def test_ring_multiply_noncommutative():
    g = symmetric(3)
    x = GroupRingElement.basis(g, 1)
    y = GroupRingElement.basis(g, 2)
    assert x * y != y * x


def test_norm_absorbs():
    for g in (cyclic(4), symmetric(3), quaternion8()):
        n = norm_element(g)
        assert (n * n).c == tuple(g.order for _ in range(g.order))
        for a in range(g.order):
            assert n * GroupRingElement.basis(g, a) == n
            assert GroupRingElement.basis(g, a) * n == n


def test_norm_kills_augmentation_ideal():
    g = cyclic(2)
    t_minus_1 = GroupRingElement(g, [-1, 1])
    assert (t_minus_1 * norm_element(g)).is_zero()


def test_augmentation_is_ring_map():
    g = symmetric(3)
    a = GroupRingElement(g, [2, -1, 0, 3, 0, 1])
    b = GroupRingElement(g, [0, 1, 1, 0, -2, 0])
    assert augmentation(a) == 5
    assert augmentation(a * b) == augmentation(a) * augmentation(b)
    assert augmentation(a + b) == augmentation(a) + augmentation(b)


def test_left_translate_matches_basis_product():
    g = dihedral(3)
    a = GroupRingElement(g, [1, 2, 0, -1, 0, 3])
    for h in range(g.order):
        assert a.left_translate(h) == GroupRingElement.basis(g, h) * a


def test_invariant_iff_norm_multiple():
    g = cyclic(3)
    assert norm_element(g).scale(4).is_invariant()
    assert not GroupRingElement(g, [2, 2, 1]).is_invariant()


def test_scalar_arithmetic():
    g = cyclic(2)
    a = GroupRingElement(g, [3, -2])
    assert (2 * a).c == (6, -4)
    assert (a - a).is_zero()
    assert (-a).c == (-3, 2)
