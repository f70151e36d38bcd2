#!/usr/bin/env python3
"""Regenerate the bundled graph atlas corpus.

Writes one graph6 line per graph of order n (2 <= n <= 7), in the ordering of
the standard atlas list (Read & Wilson, "An Atlas of Graphs"), as shipped by
networkx. Connected and disconnected graphs are both kept; corpus loaders
filter by connectivity where a check requires it. A SHA256SUMS file records
the provenance of the bundled copies.
"""
import hashlib
import pathlib

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "atlas"

def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    atlas = graph_atlas_g()
    by_n = {}
    for g in atlas:
        by_n.setdefault(g.number_of_nodes(), []).append(g)
    sums = []
    for n in range(2, 8):
        lines = []
        for g in by_n.get(n, []):
            b = nx.to_graph6_bytes(g, header=False).strip()
            lines.append(b.decode("ascii"))
        path = OUT / f"atlas_n{n}.g6"
        data = "\n".join(lines) + "\n"
        path.write_text(data)
        digest = hashlib.sha256(data.encode("ascii")).hexdigest()
        n_connected = sum(1 for g in by_n.get(n, []) if nx.is_connected(g))
        sums.append(f"{digest}  atlas_n{n}.g6")
        print(f"n={n}: {len(lines)} graphs ({n_connected} connected)")
    (OUT / "SHA256SUMS").write_text("\n".join(sums) + "\n")

if __name__ == "__main__":
    main()
