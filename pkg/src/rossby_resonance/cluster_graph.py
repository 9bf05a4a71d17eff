"""Connected components of the resonance graph over sign-classes.

Nodes are sign-classes {n, -n} (the dispersion surrogate is odd in n, so a
wavenumber resonates exactly when its negation does); each triad contributes
a 3-clique. Components from a finite enumeration box may split clusters that
are only connected through triads outside the box, so every report carries
the box bound and a truncation disclaimer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .exact_core import ResonantTriad, Wavenumber

SCALING_FAMILY_DETECTED = "scaling-family-detected"
NO_SCALING_DETECTED = "no-scaling-detected"

TRUNCATION_NOTE = (
    "components reflect only triads discovered inside the enumeration box; "
    "clusters may gain members or merge when the box grows"
)


class SignClass(tuple):
    """Canonical representative of {n, -n}, normalized to rep.n1 > 0."""

    __slots__ = ()

    def __new__(cls, w):
        w = Wavenumber(*w)
        if w.n1 == 0:
            raise ValueError("sign-classes require a nonzero zonal component")
        return super().__new__(cls, (w if w.n1 > 0 else -w,))

    @property
    def rep(self) -> Wavenumber:
        return self[0]


@dataclass(frozen=True)
class Cluster:
    """One connected component: members, inducing triads, norm signature.

    lambda_seq is the ascending list of distinct squared norms of the
    members; it is the primary sort key between clusters.
    """

    members: frozenset[SignClass]
    triads: frozenset[ResonantTriad]
    lambda_seq: tuple[int, ...]


class _UnionFind:
    """Union by size with path compression over hashable items."""

    def __init__(self):
        self._parent: dict = {}
        self._size: dict = {}

    def add(self, item) -> None:
        if item not in self._parent:
            self._parent[item] = item
            self._size[item] = 1

    def find(self, item):
        root = item
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[item] != root:
            self._parent[item], item = root, self._parent[item]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]

    def items(self):
        return self._parent.keys()


def build_components(triads: Iterable[ResonantTriad]) -> list[Cluster]:
    """Connected components of the triad 3-clique graph, in canonical order."""
    uf = _UnionFind()
    triad_list = []
    for triad in triads:
        if not isinstance(triad, ResonantTriad):
            triad = ResonantTriad.from_members(*triad)
        triad_list.append(triad)
        classes = [SignClass(m) for m in triad.members()]
        for c in classes:
            uf.add(c)
        uf.union(classes[0], classes[1])
        uf.union(classes[0], classes[2])

    members_by_root: dict = {}
    for c in uf.items():
        members_by_root.setdefault(uf.find(c), set()).add(c)
    triads_by_root: dict = {}
    for triad in triad_list:
        root = uf.find(SignClass(triad.a))
        triads_by_root.setdefault(root, set()).add(triad)

    clusters = [
        Cluster(
            members=frozenset(members),
            triads=frozenset(triads_by_root.get(root, set())),
            lambda_seq=tuple(sorted({c.rep.norm2() for c in members})),
        )
        for root, members in members_by_root.items()
    ]
    return order_clusters(clusters)


def order_clusters(clusters: list[Cluster]) -> list[Cluster]:
    """Sort by lambda_seq lexicographically; ties fall back to the sorted members.

    The tie-break makes the order total: mirror-image clusters share a norm
    signature but never a member set.
    """
    return sorted(clusters, key=lambda c: (c.lambda_seq, tuple(sorted(c.members))))


def flag_scaling(cluster: Cluster) -> str:
    """Heuristic witness of an infinite scaling family inside a cluster.

    Detected when some member is an integer multiple (factor >= 2) of
    another. A positive flag witnesses infinitude of the ambient cluster in
    the unbounded lattice; a negative flag proves nothing.
    """
    reps = sorted(c.rep for c in cluster.members)
    for i, small in enumerate(reps):
        for big in reps[i + 1:]:
            if big.n1 % small.n1 == 0:
                j = big.n1 // small.n1
                if j >= 2 and big.n2 == j * small.n2:
                    return SCALING_FAMILY_DETECTED
    return NO_SCALING_DETECTED


def clusters_to_json(clusters: list[Cluster], max_norm: int | None) -> str:
    """Cluster report document; deterministic member/triad ordering."""
    doc = {
        "schema": 1,
        "max_norm": max_norm,
        "truncation_note": TRUNCATION_NOTE,
        "clusters": [
            {
                "members": [[c.rep.n1, c.rep.n2] for c in sorted(cluster.members)],
                "lambda_seq": list(cluster.lambda_seq),
                "triads": [
                    [[m.n1, m.n2] for m in t.members()] for t in sorted(cluster.triads)
                ],
                "scaling_flag": flag_scaling(cluster),
            }
            for cluster in clusters
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
