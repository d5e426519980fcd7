# coding=utf8
"""
Copyright (C) 2020 The clusterset developers

This program is free software; you can redistribute it and/or
modify it under the terms of the GNU General Public License
as published by the Free Software Foundation; either version 2
of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

Support graphs of stochastic matrices.
Vertex sets are int bitmasks: bit v is set iff vertex v is a member.
"""

from collections import namedtuple, deque
import networkx as nx

from clusterset.const import DefaultValues
import clusterset.clusterset_error as cs_error


def mask_of(vertices):
    """bitmask of an iterable of vertices"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask):
    """sorted list of the members of a bitmask"""
    vertices = []
    while mask:
        low = mask & -mask
        vertices.append(low.bit_length() - 1)
        mask ^= low
    return vertices


def check_dimension(n, cap=DefaultValues.DIMENSION_CAP):
    if n > cap:
        msg = u"dimension {} above the bitmask cap {}".format(n, cap)
        raise cs_error.DimensionTooLarge(msg)


class DirectedGraph():
    """Directed graph on {0,...,n-1} with one out-neighbor mask per vertex
    """
    def __init__(self, n, adjacency):
        self.n = n
        self.adjacency = tuple(frozenset(a) for a in adjacency)
        for v, neighbors in enumerate(self.adjacency):
            if any(not 0 <= w < n for w in neighbors):
                msg = u"vertex {} has an out-neighbor outside [0, {})"
                raise cs_error.IndexOutOfRange(msg.format(v, n))
        self.masks = tuple(mask_of(a) for a in self.adjacency)

    @property
    def edges(self):
        return [(v, w) for v in range(self.n) for w in sorted(self.adjacency[v])]

    def to_networkx(self):
        nx_graph = nx.DiGraph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges)
        return nx_graph

    def __eq__(self, other):
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.adjacency == other.adjacency

    def __hash__(self):
        return hash(self.adjacency)


Condensation = namedtuple('Condensation', ['components', 'dag_edges', 'sinks'])


def graph_of(P):
    """G(P): edge (i, j) iff p_ij > zero_tol"""
    support = P.support
    return DirectedGraph(P.n, [[int(j) for j in support[i].nonzero()[0]]
                               for i in range(P.n)])


def union_graph(graphs):
    """Edge union of graphs sharing the same vertex set"""
    graphs = list(graphs)
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise cs_error.DimensionMismatch(u"graphs have different sizes")
    return DirectedGraph(n, [set().union(*(g.adjacency[v] for g in graphs))
                             for v in range(n)])


def out_neighbors(G, S):
    """N_G(S): every vertex receiving an edge from S"""
    image = 0
    masks = G.masks
    while S:
        low = S & -S
        image |= masks[low.bit_length() - 1]
        S ^= low
    return image


def bfs_distances(G, v):
    """Breadth-first traversal from v. Return {vertex: path length}"""
    if not 0 <= v < G.n:
        raise cs_error.IndexOutOfRange(u"vertex {} not in [0, {})".format(v, G.n))
    distances = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in sorted(G.adjacency[u]):
            if w not in distances:
                distances[w] = distances[u] + 1
                queue.append(w)
    return distances


def reachable_set(G, v):
    """All vertices reachable from v, v included"""
    return mask_of(bfs_distances(G, v))


def scc_condensation(G):
    """Strongly connected components, ordered by their smallest vertex,
    the edges between them and the sink components.
    """
    nx_graph = G.to_networkx()
    components = sorted((sorted(c) for c in nx.strongly_connected_components(nx_graph)),
                        key=lambda c: c[0])
    component_of = {}
    for idx, comp in enumerate(components):
        for v in comp:
            component_of[v] = idx
    dag_edges = sorted({(component_of[v], component_of[w])
                        for v, w in G.edges
                        if component_of[v] != component_of[w]})
    has_out = {a for a, b in dag_edges}
    sinks = [idx for idx in range(len(components)) if idx not in has_out]
    return Condensation(components=[mask_of(c) for c in components],
                        dag_edges=dag_edges, sinks=sinks)


def has_cluster_spanning_trees(G, C):
    """For each cluster, look for a vertex reachable from all its vertices.
    Return (True, roots) with the smallest such vertex per cluster,
    or (False, None).
    """
    if G.n != C.n:
        msg = u"graph has {} vertices, clustering has {}".format(G.n, C.n)
        raise cs_error.DimensionMismatch(msg)
    reachable = [reachable_set(G, v) for v in range(G.n)]
    roots = []
    for cluster in C.clusters:
        common = (1 << G.n) - 1
        for v in cluster:
            common &= reachable[v]
        if not common:
            return False, None
        roots.append(vertices_of(common)[0])
    return True, roots


def induced_strongly_connected(G, C):
    """True iff the subgraph induced on every cluster is strongly connected"""
    nx_graph = G.to_networkx()
    return all(nx.is_strongly_connected(nx_graph.subgraph(cluster))
               for cluster in C.clusters)


def same_cluster_sinks(G, C):
    """Two distinct sinks of the condensation holding vertices of one cluster.
    Return (sink_a, sink_b, i, j) as masks and vertices, or None.
    """
    cond = scc_condensation(G)
    sinks = [cond.components[s] for s in cond.sinks]
    for a_idx, sink_a in enumerate(sinks):
        for sink_b in sinks[a_idx + 1:]:
            for i in vertices_of(sink_a):
                for j in vertices_of(sink_b):
                    if C.same_cluster(i, j):
                        return sink_a, sink_b, i, j
    return None


def _dot_id(name):
    escaped = str(name).replace('\\', '\\\\').replace('"', '\\"')
    return u'"{}"'.format(escaped)


def to_dot(G, name=u"G", labels=None):
    """DOT text of a graph. Vertices are written in index order.
    """
    if labels is None:
        labels = [str(v) for v in range(G.n)]
    lines = [u"digraph {} {{".format(_dot_id(name))]
    for v in range(G.n):
        lines.append(u"  {} [label={}];".format(v, _dot_id(labels[v])))
    for v, w in G.edges:
        lines.append(u"  {} -> {};".format(v, w))
    lines.append(u"}")
    return u"\n".join(lines) + u"\n"


def condensation_to_dot(cond, name=u"CG"):
    """DOT text of a condensation. Sinks are drawn with a double border.
    """
    lines = [u"digraph {} {{".format(_dot_id(name))]
    for idx, comp in enumerate(cond.components):
        label = u"{{{}}}".format(u",".join(str(v) for v in vertices_of(comp)))
        shape = u"doublecircle" if idx in cond.sinks else u"circle"
        lines.append(u"  {} [label={}, shape={}];".format(idx, _dot_id(label), shape))
    for a, b in cond.dag_edges:
        lines.append(u"  {} -> {};".format(a, b))
    lines.append(u"}")
    return u"\n".join(lines) + u"\n"
