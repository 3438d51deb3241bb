"""Regenerates reference.json with networkx as the independent encoder.

Graphs are rebuilt here from their definitions (row-major grid ids, K5s glued at
columns -m..-1 first, then K3,3s at 0..m), not read back from minorbench output.
"""
import json
from pathlib import Path

import networkx as nx


def half_grid(m, h):
    g = nx.Graph()
    width = 2 * m + 1
    vid = lambda c, r: r * width + (c + m)
    g.add_nodes_from(range(width * (h + 1)))
    for r in range(h + 1):
        for c in range(-m, m + 1):
            if c < m:
                g.add_edge(vid(c, r), vid(c + 1, r))
            if r < h:
                g.add_edge(vid(c, r), vid(c, r + 1))
    return g, vid


def build_g(m, h):
    g, vid = half_grid(m, h)
    for a in range(-m, 0):
        base = g.number_of_nodes()
        clique = [vid(a, 0)] + list(range(base, base + 4))
        g.add_nodes_from(clique[1:])
        g.add_edges_from((x, y) for i, x in enumerate(clique) for y in clique[i + 1:])
    for b in range(0, m + 1):
        base = g.number_of_nodes()
        side = [vid(b, 0), base, base + 1]
        other = [base + 2, base + 3, base + 4]
        g.add_nodes_from(side[1:] + other)
        g.add_edges_from((x, y) for x in side for y in other)
    return g


def petersen():
    g = nx.Graph()
    g.add_edges_from([(i, (i + 1) % 5) for i in range(5)])
    g.add_edges_from([(i, i + 5) for i in range(5)])
    g.add_edges_from([(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    return g


def g6(g):
    return nx.to_graph6_bytes(g, nodes=sorted(g.nodes), header=False).decode().strip()


ref = {
    "graph6": {
        "K5": g6(nx.complete_graph(5)),
        "K3,3": g6(nx.complete_bipartite_graph(3, 3)),
        "petersen": g6(petersen()),
        "half_grid_1_1": g6(half_grid(1, 1)[0]),
        "G_1_1": g6(build_g(1, 1)),
        "G_3_7": g6(build_g(3, 7)),
    },
    "blocks_G_m_1": {str(m): len(list(nx.biconnected_components(build_g(m, 1)))) for m in (1, 2, 3)},
    "cut_vertices_G_2_1": sorted(nx.articulation_points(build_g(2, 1))),
}
Path(__file__).with_name("reference.json").write_text(json.dumps(ref, indent=1) + "\n")
