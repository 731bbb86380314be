"""
Topology families. Every generator returns an nx.Graph on nodes 0..n-1.
"""
from collections import deque

import networkx as nx


def networkx_seed(rng) -> int:
    """Draw an integer seed for networkx generators from a numpy Generator."""
    return int(rng.integers(0, 2**31 - 1))


def bfs_hotspot(G: nx.Graph, size: int) -> set:
    """The first `size` nodes reached by BFS from the highest-degree node (lowest id on ties)."""
    if G.number_of_nodes() == 0:
        return set()
    start = min(G.nodes(), key=lambda v: (-G.degree(v), v))
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue and len(order) < size:
        u = queue.popleft()
        for w in sorted(G.neighbors(u)):
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return set(order[:size])
