#!/usr/bin/env python3
"""Regenerate the graph6 corpora under data/ using networkx."""
import pathlib

import networkx as nx

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    DATA.mkdir(exist_ok=True)
    connected = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 1 and nx.is_connected(g)]
    lines = sorted({g6(g) for g in connected}, key=lambda s: (len(s), s))
    (DATA / "connected_n1-7.g6").write_text("\n".join(lines) + "\n")

    trees = [g6(nx.empty_graph(1))]
    for n in range(2, 9):
        trees.extend(g6(t) for t in nx.nonisomorphic_trees(n))
    (DATA / "trees_n1-8.g6").write_text("\n".join(trees) + "\n")


if __name__ == "__main__":
    main()
