import json

import pytest

from conftest import FINITE_CLUSTER_1, FINITE_CLUSTER_2_TRIADS, INFINITE_CLUSTER_TRIADS
from rossby_resonance.cluster_graph import (
    NO_SCALING_DETECTED,
    SCALING_FAMILY_DETECTED,
    Cluster,
    SignClass,
    build_components,
    clusters_to_json,
    flag_scaling,
    order_clusters,
)
from rossby_resonance.exact_core import ResonantTriad, Wavenumber


def _triad(triple):
    return ResonantTriad.from_members(*triple)


OMEGA1_TRIAD = _triad(FINITE_CLUSTER_1)
OMEGA2_TRIADS = [_triad(t) for t in FINITE_CLUSTER_2_TRIADS]


class TestSignClass:
    def test_normalizes_to_positive_zonal(self):
        assert SignClass((-8, 34)).rep == Wavenumber(8, -34)
        assert SignClass((8, -34)).rep == Wavenumber(8, -34)
        assert SignClass((-8, 34)) == SignClass((8, -34))

    def test_rejects_zero_zonal(self):
        with pytest.raises(ValueError):
            SignClass((0, 4))

    def test_hashable_and_sortable(self):
        classes = {SignClass((1, 11)), SignClass((-1, -11)), SignClass((3, 19))}
        assert len(classes) == 2
        assert sorted(classes)[0].rep == Wavenumber(1, 11)


class TestBuildComponents:
    def test_two_known_clusters(self):
        comps = build_components([OMEGA1_TRIAD] + OMEGA2_TRIADS)
        assert [len(c.members) for c in comps] == [3, 5]
        first, second = comps
        assert {c.rep for c in first.members} == {
            Wavenumber(1, 11),
            Wavenumber(8, -34),
            Wavenumber(9, -23),
        }
        assert {c.rep for c in second.members} == {
            Wavenumber(3, 19),
            Wavenumber(32, -44),
            Wavenumber(35, -25),
            Wavenumber(8, 26),
            Wavenumber(27, -51),
        }
        assert first.lambda_seq == (122, 610, 1220)
        assert second.lambda_seq == (370, 740, 1850, 2960, 3330)
        assert first.triads == frozenset([OMEGA1_TRIAD])
        assert second.triads == frozenset(OMEGA2_TRIADS)

    def test_single_triad_component(self):
        comps = build_components([_triad(INFINITE_CLUSTER_TRIADS[0])])
        assert len(comps) == 1
        assert len(comps[0].members) == 3

    def test_empty_input(self):
        assert build_components([]) == []

    def test_accepts_raw_triples(self):
        comps = build_components([FINITE_CLUSTER_1])
        assert len(comps) == 1

    def test_rejects_malformed_triples(self):
        with pytest.raises(ValueError):
            build_components([((1, 1), (2, 2), (3, 3))])

    def test_components_partition_the_classes(self, report60):
        report, _ = report60
        comps = build_components(report.triads)
        seen = set()
        for c in comps:
            assert not (c.members & seen)
            seen |= c.members
        all_classes = {SignClass(w) for t in report.triads for w in t.members()}
        assert seen == all_classes

    def test_rebuild_is_idempotent(self, report60):
        report, _ = report60
        comps = build_components(report.triads)
        rebuilt = build_components([t for c in comps for t in c.triads])
        assert rebuilt == comps


class TestOrderClusters:
    def test_known_order(self):
        comps = build_components(OMEGA2_TRIADS + [OMEGA1_TRIAD])
        assert comps[0].lambda_seq[0] == 122
        assert comps[1].lambda_seq[0] == 370

    def test_mirror_tie_broken_by_smallest_member(self):
        mirrored = OMEGA1_TRIAD.mirrored()
        comps = build_components([OMEGA1_TRIAD, mirrored])
        assert len(comps) == 2
        assert comps[0].lambda_seq == comps[1].lambda_seq
        assert min(comps[0].members) < min(comps[1].members)

    def test_permutation_invariance(self):
        triads = [OMEGA1_TRIAD] + OMEGA2_TRIADS + [_triad(t) for t in INFINITE_CLUSTER_TRIADS]
        a = build_components(triads)
        b = build_components(list(reversed(triads)))
        assert a == b

    def test_single_cluster(self):
        comps = build_components([OMEGA1_TRIAD])
        assert order_clusters(comps) == comps


class TestFlagScaling:
    def test_detects_integer_multiple(self):
        cluster = Cluster(
            members=frozenset({SignClass((16, 2)), SignClass((-32, -4))}),
            triads=frozenset(),
            lambda_seq=(260, 1040),
        )
        assert flag_scaling(cluster) == SCALING_FAMILY_DETECTED

    def test_known_finite_cluster_shows_none(self):
        comps = build_components([OMEGA1_TRIAD])
        assert flag_scaling(comps[0]) == NO_SCALING_DETECTED

    def test_empty_cluster(self):
        empty = Cluster(members=frozenset(), triads=frozenset(), lambda_seq=())
        assert flag_scaling(empty) == NO_SCALING_DETECTED

    def test_non_multiple_pairs_ignored(self):
        cluster = Cluster(
            members=frozenset({SignClass((2, 3)), SignClass((4, 5))}),
            triads=frozenset(),
            lambda_seq=(13, 41),
        )
        assert flag_scaling(cluster) == NO_SCALING_DETECTED


class TestClusterReport:
    def test_document_shape(self):
        doc = json.loads(clusters_to_json(build_components([OMEGA1_TRIAD]), 60))
        assert doc["schema"] == 1
        assert doc["max_norm"] == 60
        assert "truncation_note" in doc
        (cluster,) = doc["clusters"]
        assert cluster["members"] == [[1, 11], [8, -34], [9, -23]]
        assert cluster["lambda_seq"] == [122, 610, 1220]
        assert cluster["scaling_flag"] == NO_SCALING_DETECTED
        assert cluster["triads"] == [[[-9, 23], [1, 11], [8, -34]]]

    def test_deterministic(self):
        triads = [OMEGA1_TRIAD] + OMEGA2_TRIADS
        assert clusters_to_json(build_components(triads), 60) == clusters_to_json(
            build_components(list(reversed(triads))), 60
        )
