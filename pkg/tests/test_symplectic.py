"""Symplectic graphs and the exhaustive Delsarte clique census."""

from __future__ import annotations

import pytest

from srgforge import (canonical_form, CensusTooLarge, complement,
                      complete_multipartite, delsarte_clique_census,
                      make_field, NonIntegralBound, NotSrg, path_graph,
                      petersen_graph, projective_points, symplectic_form,
                      symplectic_graph, triangular_graph, verify_srg,
                      srg1_target_params, SrgParams)


def test_sp42_parameters_and_complement():
    field = make_field(2, 1)
    g = symplectic_graph(field, 2)
    cert = verify_srg(g)
    assert SrgParams.from_certificate(cert).as_tuple() == (15, 6, 1, 3)
    assert canonical_form(complement(g)).graph6 == \
        canonical_form(triangular_graph(6)).graph6


def test_sp43_parameters():
    g = symplectic_graph(make_field(3, 1), 2)
    assert verify_srg(g).parameters["v"] == 40
    assert SrgParams.from_certificate(verify_srg(g)).as_tuple() == \
        (40, 12, 2, 4)


def test_sp62_matches_attachment_target():
    g = symplectic_graph(make_field(2, 1), 3)
    cert = verify_srg(complement(g))
    assert SrgParams.from_certificate(cert) == srg1_target_params(2, 3)


def test_form_is_alternating():
    field = make_field(3, 1)
    pts = projective_points(field, 4)
    for x in pts:
        assert symplectic_form(field, x, x) == 0
    for x in pts[:10]:
        for y in pts[:10]:
            lhs = symplectic_form(field, x, y)
            rhs = symplectic_form(field, y, x)
            assert field.add(lhs, rhs) == 0


def test_symplectic_rejects_low_dim():
    with pytest.raises(ValueError):
        symplectic_graph(make_field(2, 1), 1)


def test_census_triangular():
    census = delsarte_clique_census(triangular_graph(6))
    assert census.size == 5
    assert census.count == 6
    for clique in census.cliques:
        assert len(clique) == 5
        g = triangular_graph(6)
        for i, u in enumerate(clique):
            for w in clique[i + 1:]:
                assert g.has_edge(u, w)


def test_census_symplectic_lines():
    g = symplectic_graph(make_field(2, 1), 2)
    census = delsarte_clique_census(g)
    assert census.size == 3
    assert census.count == 15


def test_census_no_ovoids_for_odd_q():
    g = complement(symplectic_graph(make_field(3, 1), 2))
    census = delsarte_clique_census(g)
    assert census.size == 10
    assert census.count == 0


def test_census_errors():
    with pytest.raises(NonIntegralBound):
        delsarte_clique_census(petersen_graph())
    with pytest.raises(NotSrg):
        delsarte_clique_census(path_graph(4))
    with pytest.raises(CensusTooLarge):
        delsarte_clique_census(complete_multipartite(*[2] * 62))
    with pytest.raises(CensusTooLarge):
        delsarte_clique_census(complete_multipartite(*[2] * 18))
