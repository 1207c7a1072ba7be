"""Divisible design graph construction, verification, extraction, files."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from srgforge import (affine_geometry_design, as_prime_power,
                      BijectionFamily, canonical_form, complete_graph,
                      complete_multipartite, construct_ddg,
                      counting_lower_bound, cyclic_quasigroup, DdgParams,
                      extract_ddg_from_srg, identity_family, LeftQuasigroup,
                      load_family, load_quasigroup, make_field, NotAClique,
                      NotPrime, NotRegularClique, ParseError, petersen_graph,
                      random_bijection_family, random_left_quasigroup,
                      save_family, save_quasigroup, ShapeError, ShapeMismatch,
                      theorem1_params, verify_ddg, VertexPartition)


def build(q, d, seed=None, quasigroup=None):
    field = make_field(*as_prime_power(q))
    design = affine_geometry_design(field, d)
    m = design.n_classes
    qg = quasigroup or cyclic_quasigroup(m)
    if seed is None:
        family = identity_family(m, q)
    else:
        family = random_bijection_family(m, q, qg, seed)
    return construct_ddg([design] * m, qg, family)


def test_theorem1_params_table():
    assert theorem1_params(2, 2).as_tuple() == (12, 6, 2, 3, 3, 4)
    assert theorem1_params(3, 2).as_tuple() == (36, 24, 15, 16, 4, 9)
    assert theorem1_params(2, 3).as_tuple() == (56, 28, 12, 14, 7, 8)
    assert theorem1_params(4, 2).as_tuple() == (80, 60, 44, 45, 5, 16)


def test_theorem1_params_errors():
    with pytest.raises(ValueError):
        theorem1_params(2, 1)
    with pytest.raises(NotPrime):
        theorem1_params(6, 2)


def test_ddg_params_validation():
    with pytest.raises(ValueError):
        DdgParams(v=13, k=6, lambda1=2, lambda2=3, m=3, n=4)


def test_cyclic_quasigroup():
    qg = cyclic_quasigroup(4)
    assert qg.op(1, 3) == 0
    for i in range(4):
        assert sorted(qg.table[i]) == list(range(4))


def test_left_quasigroup_validation():
    with pytest.raises(ValueError):
        LeftQuasigroup(2, ((0, 0), (0, 1)))


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=0,
                                                          max_value=500))
def test_random_left_quasigroup_rows(m, seed):
    qg = random_left_quasigroup(m, seed)
    assert qg == random_left_quasigroup(m, seed)
    for row in qg.table:
        assert sorted(row) == list(range(m))


def test_bijection_family_validation():
    ident = ((0, 1), (0, 1))
    swap = ((1, 0), (1, 0))
    with pytest.raises(ValueError):  # diagonal must be identity
        BijectionFamily(2, 2, (((1, 0), (0, 1)), ((0, 1), (0, 1))))
    with pytest.raises(ValueError):  # off-diagonal pair must be inverse
        BijectionFamily(2, 2, ((ident[0], (1, 0)), ((0, 1), ident[1])))
    fam = BijectionFamily(2, 2, (((0, 1), (1, 0)), ((1, 0), (0, 1))))
    assert fam.sigma[0][1] == (1, 0)


@given(st.integers(min_value=0, max_value=200))
def test_random_family_is_consistent(seed):
    qg = cyclic_quasigroup(4)
    fam = random_bijection_family(4, 3, qg, seed)
    assert fam == random_bijection_family(4, 3, qg, seed)
    for i in range(4):
        assert fam.sigma[i][i] == (0, 1, 2)
        for j in range(4):
            perm = fam.sigma[i][j]
            for x in range(3):
                assert fam.sigma[j][i][perm[x]] == x


def test_random_family_needs_matching_quasigroup():
    with pytest.raises(ShapeMismatch):
        random_bijection_family(4, 2, cyclic_quasigroup(3), 0)


@pytest.mark.parametrize("q,d", [(2, 2), (3, 2), (2, 3), (4, 2)])
def test_construct_matches_formula(q, d):
    g, partition = build(q, d, seed=1)
    cert = verify_ddg(g, partition)
    assert cert.passed, cert.witnesses
    assert DdgParams.from_certificate(cert) == theorem1_params(q, d)


@given(st.integers(min_value=0, max_value=300),
       st.sampled_from([(2, 2), (3, 2), (2, 3)]))
def test_construct_verifies_for_any_seed(seed, qd):
    q, d = qd
    m = theorem1_params(q, d).m
    qg = random_left_quasigroup(m, seed)
    g, partition = build(q, d, seed=seed, quasigroup=qg)
    cert = verify_ddg(g, partition)
    assert cert.passed
    assert DdgParams.from_certificate(cert) == theorem1_params(q, d)


def test_intra_class_subgraph_is_multipartite():
    q, d = 3, 2
    g, partition = build(q, d, seed=5)
    target = complete_multipartite(*([q ** (d - 1)] * q))
    want = canonical_form(target).graph6
    for cls in partition.classes:
        sub = g.induced(cls)
        assert canonical_form(sub).graph6 == want


def test_intra_class_subgraph_ignores_family():
    q, d = 2, 3
    g1, partition = build(q, d, seed=10)
    g2, _ = build(q, d, seed=11)
    for cls in partition.classes:
        assert g1.induced(cls) == g2.induced(cls)


def test_construct_rejects_shape_mismatch():
    field = make_field(2, 1)
    design = affine_geometry_design(field, 2)
    m = design.n_classes
    with pytest.raises(ShapeMismatch):
        construct_ddg([design] * (m - 1), cyclic_quasigroup(m),
                      identity_family(m, 2))
    with pytest.raises(ShapeMismatch):
        construct_ddg([design] * m, cyclic_quasigroup(m + 1),
                      identity_family(m + 1, 2))


def test_verify_ddg_rejects_wrong_graphs():
    p = petersen_graph()
    part = VertexPartition.from_lists(10, [[0, 1, 2, 3, 4], [5, 6, 7, 8, 9]])
    assert not verify_ddg(p, part).passed

    k6 = complete_graph(6)
    part6 = VertexPartition.from_lists(6, [[0, 1, 2], [3, 4, 5]])
    cert = verify_ddg(k6, part6)
    assert not cert.passed
    assert any(w.get("check") == "excluded" for w in cert.witnesses)

    g, partition = build(2, 2)
    bad = VertexPartition.from_lists(12, [tuple(range(6)),
                                          tuple(range(6, 12))])
    assert not verify_ddg(g, bad).passed


def test_verify_ddg_partition_shape_witness():
    g, _ = build(2, 2)
    small = VertexPartition.from_lists(4, [[0, 1], [2, 3]])
    cert = verify_ddg(g, small)
    assert not cert.passed
    assert any(w.get("check") == "partition-shape" for w in cert.witnesses)


def test_extraction_errors():
    p = petersen_graph()
    with pytest.raises(NotAClique):
        extract_ddg_from_srg(p, (0, 2))
    with pytest.raises(NotRegularClique):
        extract_ddg_from_srg(p, (0,))


def test_counting_lower_bound():
    assert counting_lower_bound(2, 2) == Fraction(8, 36 ** 12 * 576)
    assert 0 < counting_lower_bound(3, 2) < 1
    with pytest.raises(ValueError):
        counting_lower_bound(1, 2)
    with pytest.raises(ValueError):
        counting_lower_bound(2, 1)


def test_quasigroup_file_round_trip(tmp_path):
    qg = random_left_quasigroup(5, 3)
    path = tmp_path / "qg.txt"
    save_quasigroup(qg, path)
    assert load_quasigroup(path) == qg

    path.write_text("0 1\n1 x\n")
    with pytest.raises(ParseError):
        load_quasigroup(path)
    path.write_text("0 1\n1\n")
    with pytest.raises(ShapeError):
        load_quasigroup(path)


def test_family_file_round_trip(tmp_path):
    qg = cyclic_quasigroup(4)
    fam = random_bijection_family(4, 3, qg, 9)
    path = tmp_path / "fam.txt"
    save_family(fam, path)
    assert load_family(path, 4, 3) == fam


def test_family_file_defaults_and_errors(tmp_path):
    path = tmp_path / "fam.txt"
    path.write_text("0 1 : 1 2 0\n")
    fam = load_family(path, 3, 3)
    assert fam.sigma[0][1] == (1, 2, 0)
    assert fam.sigma[1][0] == (2, 0, 1)  # inverse filled in
    assert fam.sigma[0][2] == (0, 1, 2)  # omitted pairs default to identity

    path.write_text("0 1 1 2 0\n")
    with pytest.raises(ParseError):
        load_family(path, 3, 3)
    path.write_text("0 1 : 1 2\n")
    with pytest.raises(ShapeError):
        load_family(path, 3, 3)
    path.write_text("0 1 : 1 1 0\n")
    with pytest.raises(ShapeError):
        load_family(path, 3, 3)
    path.write_text("0 5 : 1 2 0\n")
    with pytest.raises(ShapeError):
        load_family(path, 3, 3)
    path.write_text("0 1 : 1 2 0\n1 0 : 1 2 0\n")
    with pytest.raises(ParseError):
        load_family(path, 3, 3)
