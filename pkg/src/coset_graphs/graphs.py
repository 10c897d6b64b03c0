"""Reachability graphs, contracted graphs, and graph analysis.

A reachability graph is the labeled orbit of a state under a generating
gate set: vertices are states modulo global phase (canonical fingerprints),
and each vertex carries one outgoing edge per generator.  Contracting a
reachability graph merges vertices connected by the entropy-preserving
local subgroup, realizing the corresponding double-coset space; class
counts therefore agree with the group-side double-coset partition whenever
the full group is enumerable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from io import StringIO
from xml.sax.saxutils import escape

import numpy as np

from . import clifford, entropy, group as group_mod, states as states_mod
from .clifford import CliffordElement
from .entropy import EntropyVector
from .group import EnumeratedGroup, _UnionFind
from .states import PureState


class OrbitOverflowError(RuntimeError):
    """Orbit BFS exceeded the configured vertex cap."""


class ToleranceError(RuntimeError):
    """Fingerprint identity disagreed with the inner-product confirmation."""


INVOLUTION_KINDS = ("H", "C")  # rendered undirected by default


@dataclass
class ReachabilityGraph:
    n: int
    generator_labels: tuple[str, ...]
    amplitude_matrix: np.ndarray  # (vertices, 2^n)
    fingerprints: list[bytes]
    edges: list[tuple[int, ...]]  # [vertex][generator position] -> target
    parents: list[tuple[int, int]]  # BFS tree: (parent, generator position)
    start: int = 0
    entropy_components: np.ndarray | None = None  # (vertices, 2^(n-1)-1)
    entropy_class: list[int] | None = None
    class_vectors: list[EntropyVector] | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.fingerprints)

    def state(self, i: int) -> PureState:
        return PureState(self.amplitude_matrix[i], self.n, _skip_checks=True)

    def vertex_vector(self, i: int) -> EntropyVector:
        if self.entropy_class is None or self.class_vectors is None:
            raise ValueError("graph was built without entropy annotations")
        return self.class_vectors[self.entropy_class[i]]

    def word_to(self, i: int) -> str:
        tokens: list[str] = []
        while i != self.start:
            parent, gen_pos = self.parents[i]
            tokens.append(self.generator_labels[gen_pos])
            i = parent
        return " ".join(tokens)

    def edge_triples(self) -> list[tuple[int, str, int]]:
        out = []
        for u, row in enumerate(self.edges):
            for gpos, v in enumerate(row):
                out.append((u, self.generator_labels[gpos], v))
        return out


@dataclass
class ContractedGraph:
    n: int
    generator_labels: tuple[str, ...]
    local_generator_labels: tuple[str, ...]
    local_order: int
    classes: list[list[int]]
    class_of: list[int] = field(repr=False)
    edges: dict[tuple[int, str, int], int]  # (src class, label, dst class) -> multiplicity
    self_loops: dict[tuple[int, str], int]
    keep_loops: bool
    entropy_class: list[int] | None = None  # per contracted class
    class_vectors: list[EntropyVector] | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.classes)

    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def edge_triples(self) -> list[tuple[int, str, int, int]]:
        return sorted((u, lbl, v, m) for (u, lbl, v), m in self.edges.items())


def _gate_elements(generators, n_gate: int = 2) -> tuple[tuple[str, ...], list[CliffordElement]]:
    words = group_mod._generator_words(generators)
    needed = max(
        (max(lab.qubits) for w in words for lab in clifford.parse_word(w)), default=1
    )
    m = max(n_gate, needed)
    return words, [clifford.element_of(w, m) for w in words]


def reachability(
    state: PureState,
    generators,
    max_vertices: int = 200_000,
    annotate: bool = True,
    tol: float = states_mod.OVERLAP_TOL,
) -> ReachabilityGraph:
    """Breadth-first orbit of a state under a gate set, acting on low qubits."""
    labels, gens = _gate_elements(generators)
    if gens and gens[0].n > state.n:
        raise ValueError("generators act on more qubits than the state has")
    mats = [states_mod._complex_matrix(g.matrix) for g in gens]
    dim_gate = mats[0].shape[0] if mats else 1

    amps0 = state.amplitudes
    vertices: list[np.ndarray] = [amps0]
    fingerprints: list[bytes] = [states_mod.fingerprint_of(amps0)]
    lookup: dict[bytes, int] = {fingerprints[0]: 0}
    parents: list[tuple[int, int]] = [(-1, -1)]
    edges: list[tuple[int, ...]] = []
    frontier = [0]
    while frontier:
        next_frontier: list[int] = []
        for i in frontier:
            src = vertices[i].reshape(-1, dim_gate)
            row = []
            for gpos, u in enumerate(mats):
                produced = (src @ u.T).reshape(-1)
                fp = states_mod.fingerprint_of(produced)
                j = lookup.get(fp)
                if j is None:
                    if len(vertices) >= max_vertices:
                        raise OrbitOverflowError(
                            f"orbit exceeded max_vertices={max_vertices}"
                        )
                    j = len(vertices)
                    lookup[fp] = j
                    vertices.append(produced)
                    fingerprints.append(fp)
                    parents.append((i, gpos))
                    next_frontier.append(j)
                else:
                    overlap = abs(complex(np.vdot(vertices[j], produced)))
                    if overlap < 1.0 - tol:
                        raise ToleranceError(
                            f"fingerprint collision with overlap {overlap}"
                        )
                row.append(j)
            edges.append(tuple(row))
        frontier = next_frontier

    graph = ReachabilityGraph(
        n=state.n,
        generator_labels=labels,
        amplitude_matrix=np.vstack(vertices),
        fingerprints=fingerprints,
        edges=edges,
        parents=parents,
    )
    if annotate:
        annotate_entropy(graph)
    return graph


def annotate_entropy(graph: ReachabilityGraph) -> None:
    """Attach quantized entropy vectors and class ids to every vertex.

    Subsystems that contain all gate qubits, or none of them, keep the same
    entropy along the whole orbit; those columns are computed once from the
    start vertex and broadcast.
    """
    gate_qubits = {
        q
        for word in graph.generator_labels
        for lab in clifford.parse_word(word)
        for q in lab.qubits
    }
    subs = entropy.subsystems(graph.n)
    varying: list[int] = []
    for col, subset in enumerate(subs):
        hit = len(gate_qubits & set(subset))
        if 0 < hit < len(gate_qubits):
            varying.append(col)
    comps = np.empty((graph.vertex_count, len(subs)), dtype=np.float64)
    seed = entropy.entropy_components_batch(
        graph.amplitude_matrix[graph.start : graph.start + 1], graph.n
    )[0]
    comps[:] = seed  # constant columns
    if varying:
        comps[:, varying] = entropy.entropy_components_batch(
            graph.amplitude_matrix, graph.n, varying
        )
    graph.entropy_components = comps
    class_ids: dict[tuple[float, ...], int] = {}
    vectors: list[EntropyVector] = []
    assignment: list[int] = []
    for i in range(comps.shape[0]):
        vec = EntropyVector(graph.n, tuple(comps[i]))
        cid = class_ids.get(vec.key)
        if cid is None:
            cid = len(vectors)
            class_ids[vec.key] = cid
            vectors.append(vec)
        assignment.append(cid)
    graph.entropy_class = assignment
    graph.class_vectors = vectors


def stabilizer_subgroup(
    state: PureState,
    enumerated: EnumeratedGroup,
    tol: float = states_mod.OVERLAP_TOL,
) -> frozenset[int]:
    """Indices of group elements fixing the state up to global phase."""
    found = set()
    amps = state.amplitudes
    dim_gate = 1 << enumerated.n
    src = amps.reshape(-1, dim_gate)
    for i, element in enumerate(enumerated.elements):
        u = states_mod._complex_matrix(element.matrix)
        produced = (src @ u.T).reshape(-1)
        if abs(complex(np.vdot(amps, produced))) >= 1.0 - tol:
            found.add(i)
    members = frozenset(found)
    if not enumerated.is_subgroup(members):
        raise ToleranceError("stabilizer set is not closed; tolerance too loose")
    return members


def contract(
    graph: ReachabilityGraph,
    local_generators,
    keep_loops: bool = False,
    max_local_order: int = 10_000,
) -> ContractedGraph:
    """Quotient a reachability graph by the entropy-preserving subgroup.

    The local subgroup H is enumerated once; vertices u and h.u are merged
    for h ranging over H whenever the image is a graph vertex.  When every
    local generator maps every vertex into the graph (H inside the orbit
    group, the usual case), merging along generator moves alone already
    realizes the full H-orbit partition and the enumeration is used only
    for its order.
    """
    local_labels, local_gens = _gate_elements(local_generators)
    local_group = group_mod.enumerate_group_cached(list(local_labels), 2, max_local_order)

    lookup = {fp: i for i, fp in enumerate(graph.fingerprints)}
    mats = [states_mod._complex_matrix(g.matrix) for g in local_gens]
    dim_gate = mats[0].shape[0] if mats else 1

    uf = _UnionFind(graph.vertex_count)
    escaped = False
    for u_mat in mats:
        images = (
            graph.amplitude_matrix.reshape(graph.vertex_count, -1, dim_gate) @ u_mat.T
        ).reshape(graph.vertex_count, -1)
        for v in range(graph.vertex_count):
            j = lookup.get(states_mod.fingerprint_of(images[v]))
            if j is None:
                escaped = True
            else:
                uf.union(v, j)
    if escaped:
        # fall back to the full H sweep, skipping images outside the graph
        for element in local_group.elements:
            u_mat = states_mod._complex_matrix(element.matrix)
            images = (
                graph.amplitude_matrix.reshape(graph.vertex_count, -1, dim_gate)
                @ u_mat.T
            ).reshape(graph.vertex_count, -1)
            for v in range(graph.vertex_count):
                j = lookup.get(states_mod.fingerprint_of(images[v]))
                if j is not None:
                    uf.union(v, j)

    classes, class_of = uf.blocks()
    edge_mult: dict[tuple[int, str, int], int] = {}
    loops: dict[tuple[int, str], int] = {}
    for u, row in enumerate(graph.edges):
        for gpos, v in enumerate(row):
            cu, cv = class_of[u], class_of[v]
            label = graph.generator_labels[gpos]
            if cu == cv:
                loops[(cu, label)] = loops.get((cu, label), 0) + 1
            else:
                key = (cu, label, cv)
                edge_mult[key] = edge_mult.get(key, 0) + 1

    entropy_class = None
    vectors = None
    if graph.entropy_class is not None:
        entropy_class = [graph.entropy_class[cls[0]] for cls in classes]
        vectors = graph.class_vectors
    return ContractedGraph(
        n=graph.n,
        generator_labels=graph.generator_labels,
        local_generator_labels=local_labels,
        local_order=len(local_group),
        classes=classes,
        class_of=class_of,
        edges=edge_mult,
        self_loops=loops,
        keep_loops=keep_loops,
        entropy_class=entropy_class,
        class_vectors=vectors,
    )


def class_vector_counts(
    graph: ReachabilityGraph,
) -> list[tuple[EntropyVector, int]]:
    """Distinct entropy vectors with their vertex multiplicities, by class id."""
    if graph.entropy_class is None or graph.class_vectors is None:
        raise ValueError("graph was built without entropy annotations")
    counts = [0] * len(graph.class_vectors)
    for cid in graph.entropy_class:
        counts[cid] += 1
    return [(vec, counts[i]) for i, vec in enumerate(graph.class_vectors)]


def entropic_diversity(graph: ReachabilityGraph | ContractedGraph) -> int:
    """Number of distinct quantized entropy vectors among the vertices."""
    if isinstance(graph, ReachabilityGraph):
        if graph.entropy_class is None:
            raise ValueError("graph was built without entropy annotations")
        return len(set(graph.entropy_class))
    if graph.entropy_class is None:
        raise ValueError("contracted graph carries no entropy annotations")
    return len(set(graph.entropy_class))


def _undirected_adjacency(graph: ReachabilityGraph | ContractedGraph) -> list[set[int]]:
    count = graph.vertex_count
    adj: list[set[int]] = [set() for _ in range(count)]
    if isinstance(graph, ReachabilityGraph):
        for u, row in enumerate(graph.edges):
            for v in row:
                if u != v:
                    adj[u].add(v)
                    adj[v].add(u)
    else:
        for (u, _lbl, v), _m in graph.edges.items():
            adj[u].add(v)
            adj[v].add(u)
    return adj


def diameter(graph: ReachabilityGraph | ContractedGraph) -> int:
    """Max over vertex pairs of the shortest undirected path length."""
    adj = _undirected_adjacency(graph)
    count = len(adj)
    if count == 0:
        raise ValueError("empty graph")
    best = 0
    for source in range(count):
        dist = [-1] * count
        dist[source] = 0
        queue = [source]
        reached = 1
        while queue:
            nxt: list[int] = []
            for u in queue:
                du = dist[u]
                for v in adj[u]:
                    if dist[v] < 0:
                        dist[v] = du + 1
                        nxt.append(v)
                        reached += 1
            queue = nxt
        if reached != count:
            raise ValueError("graph is disconnected")
        best = max(best, max(dist))
    return best


def components_by_labels(
    graph: ReachabilityGraph, labels: set[str] | None = None
) -> list[list[int]]:
    """Connected components using only edges with the given labels."""
    uf = _UnionFind(graph.vertex_count)
    for u, row in enumerate(graph.edges):
        for gpos, v in enumerate(row):
            if labels is None or graph.generator_labels[gpos] in labels:
                uf.union(u, v)
    blocks, _ = uf.blocks()
    return blocks


def subgraph(
    graph: ReachabilityGraph,
    vertices: list[int],
    labels: set[str] | None = None,
) -> ReachabilityGraph:
    """Induced subgraph on a vertex subset, restricted to the given labels.

    Every kept generator must map the subset into itself (true for the
    label-closed components returned by components_by_labels).
    """
    keep_positions = [
        gpos
        for gpos, lbl in enumerate(graph.generator_labels)
        if labels is None or lbl in labels
    ]
    remap = {old: new for new, old in enumerate(vertices)}
    new_edges = []
    for old in vertices:
        row = []
        for gpos in keep_positions:
            target = graph.edges[old][gpos]
            if target not in remap:
                raise ValueError("vertex subset is not closed under kept labels")
            row.append(remap[target])
        new_edges.append(tuple(row))
    sub = ReachabilityGraph(
        n=graph.n,
        generator_labels=tuple(graph.generator_labels[g] for g in keep_positions),
        amplitude_matrix=graph.amplitude_matrix[vertices],
        fingerprints=[graph.fingerprints[v] for v in vertices],
        edges=new_edges,
        parents=[(-1, -1)] * len(vertices),
        start=0,
    )
    if graph.entropy_class is not None:
        sub.entropy_components = (
            graph.entropy_components[vertices]
            if graph.entropy_components is not None
            else None
        )
        sub.entropy_class = [graph.entropy_class[v] for v in vertices]
        sub.class_vectors = graph.class_vectors
    return sub


# --- isomorphism ----------------------------------------------------------------


class _MultiGraph:
    """Directed edge-labeled multigraph in adjacency form for isomorphism."""

    __slots__ = ("count", "out", "inc")

    def __init__(self, count: int, triples: list[tuple[int, object, int]]):
        self.count = count
        self.out: list[dict[tuple[object, int], int]] = [dict() for _ in range(count)]
        self.inc: list[dict[tuple[object, int], int]] = [dict() for _ in range(count)]
        for u, lbl, v in triples:
            self.out[u][(lbl, v)] = self.out[u].get((lbl, v), 0) + 1
            self.inc[v][(lbl, u)] = self.inc[v].get((lbl, u), 0) + 1


def _as_multigraph(
    graph: ReachabilityGraph | ContractedGraph, respect_edge_labels: bool
) -> _MultiGraph:
    triples: list[tuple[int, object, int]] = []
    if isinstance(graph, ReachabilityGraph):
        for u, lbl, v in graph.edge_triples():
            triples.append((u, lbl if respect_edge_labels else None, v))
    else:
        for (u, lbl, v), mult in graph.edges.items():
            key = lbl if respect_edge_labels else None
            triples.extend([(u, key, v)] * mult)
        if graph.keep_loops:
            for (u, lbl), mult in graph.self_loops.items():
                key = lbl if respect_edge_labels else None
                triples.extend([(u, key, u)] * mult)
    return _MultiGraph(graph.vertex_count, triples)


def _refine(g: _MultiGraph, colors: list[int]) -> list[int]:
    while True:
        signatures = []
        for v in range(g.count):
            out_sig = tuple(
                sorted((lbl, colors[t], m) for (lbl, t), m in g.out[v].items())
            )
            in_sig = tuple(
                sorted((lbl, colors[s], m) for (lbl, s), m in g.inc[v].items())
            )
            signatures.append((colors[v], out_sig, in_sig))
        palette: dict[tuple, int] = {}
        new_colors = []
        for sig in signatures:
            if sig not in palette:
                palette[sig] = len(palette)
            new_colors.append(palette[sig])
        if new_colors == colors:
            return colors
        colors = new_colors


def _color_histogram(colors: list[int]) -> dict[int, int]:
    hist: dict[int, int] = {}
    for c in colors:
        hist[c] = hist.get(c, 0) + 1
    return hist


def _check_bijection(g1: _MultiGraph, g2: _MultiGraph, mapping: list[int]) -> bool:
    for u in range(g1.count):
        image = {
            (lbl, mapping[t]): m for (lbl, t), m in g1.out[u].items()
        }
        if image != g2.out[mapping[u]]:
            return False
    return True


def _joint_colors(g1: _MultiGraph, g2: _MultiGraph, c1: list[int], c2: list[int]):
    """Refine both graphs on their disjoint union; None when histograms split."""
    offset = g1.count
    union = _MultiGraph(g1.count + g2.count, [])
    union.out = [dict(d) for d in g1.out] + [
        {(lbl, t + offset): m for (lbl, t), m in d.items()} for d in g2.out
    ]
    union.inc = [dict(d) for d in g1.inc] + [
        {(lbl, s + offset): m for (lbl, s), m in d.items()} for d in g2.inc
    ]
    colors = _refine(union, list(c1) + list(c2))
    r1, r2 = colors[: g1.count], colors[g1.count :]
    if _color_histogram(r1) != _color_histogram(r2):
        return None
    return r1, r2


def _iso_search(g1: _MultiGraph, g2: _MultiGraph, c1: list[int], c2: list[int]) -> bool:
    refined = _joint_colors(g1, g2, c1, c2)
    if refined is None:
        return False
    r1, r2 = refined
    if len(set(r1)) == g1.count:
        # discrete colorings: the color match defines the only candidate map
        target = {c: v for v, c in enumerate(r2)}
        mapping = [target[c] for c in r1]
        return _check_bijection(g1, g2, mapping)
    # individualize the smallest non-singleton class
    hist = _color_histogram(r1)
    color = min(c for c, size in hist.items() if size > 1)
    fresh = max(hist) + 1
    v = r1.index(color)
    for u in range(g2.count):
        if r2[u] != color:
            continue
        n1 = list(r1)
        n2 = list(r2)
        n1[v] = fresh
        n2[u] = fresh
        if _iso_search(g1, g2, n1, n2):
            return True
    return False


def isomorphic(
    g1: ReachabilityGraph | ContractedGraph,
    g2: ReachabilityGraph | ContractedGraph,
    respect_edge_labels: bool = True,
) -> bool:
    """Exact isomorphism of directed edge-labeled multigraphs."""
    if g1.vertex_count != g2.vertex_count:
        return False
    m1 = _as_multigraph(g1, respect_edge_labels)
    m2 = _as_multigraph(g2, respect_edge_labels)
    return _iso_search(m1, m2, [0] * m1.count, [0] * m2.count)


# --- export ----------------------------------------------------------------------


def _vector_attr(graph, cid: int) -> str:
    if graph.class_vectors is None:
        return ""
    return ";".join(graph.class_vectors[cid].format_components())


def export(graph: ReachabilityGraph | ContractedGraph, fmt: str) -> str:
    """Deterministic serialization: dot, graphml, json, or csv-summary."""
    if fmt == "dot":
        return _export_dot(graph)
    if fmt == "graphml":
        return _export_graphml(graph)
    if fmt == "json":
        return _export_json(graph)
    if fmt in ("csv", "csv-summary"):
        return _export_csv_summary(graph)
    raise ValueError(f"unknown export format {fmt!r}")


def _iter_export_edges(graph):
    """(u, label, v, mult, directed) with involutions merged to one record."""
    if isinstance(graph, ReachabilityGraph):
        seen: set[tuple[int, str, int]] = set()
        for u, lbl, v in graph.edge_triples():
            directed = not lbl.startswith(INVOLUTION_KINDS)
            if not directed:
                if (v, lbl, u) in seen:
                    continue
                seen.add((u, lbl, v))
            yield u, lbl, v, 1, directed
    else:
        merged: dict[tuple[int, str, int], tuple[int, bool]] = {}
        for (u, lbl, v), m in sorted(graph.edges.items()):
            directed = not lbl.startswith(INVOLUTION_KINDS)
            if not directed and (v, lbl, u) in merged:
                continue
            merged[(u, lbl, v)] = (m, directed)
        for (u, lbl, v), (m, directed) in merged.items():
            yield u, lbl, v, m, directed
        if graph.keep_loops:
            for (u, lbl), m in sorted(graph.self_loops.items()):
                yield u, lbl, u, m, False


def _node_rows(graph):
    if isinstance(graph, ReachabilityGraph):
        for v in range(graph.vertex_count):
            cid = graph.entropy_class[v] if graph.entropy_class is not None else -1
            yield v, cid, 1
    else:
        for v, members in enumerate(graph.classes):
            cid = graph.entropy_class[v] if graph.entropy_class is not None else -1
            yield v, cid, len(members)


def _export_dot(graph) -> str:
    out = StringIO()
    out.write("digraph coset_graph {\n")
    for v, cid, size in _node_rows(graph):
        attrs = [f"entropy_class={cid}"]
        vec = _vector_attr(graph, cid) if cid >= 0 else ""
        if vec:
            attrs.append(f'entropy_vector="{vec}"')
        if size > 1:
            attrs.append(f"size={size}")
        out.write(f"  v{v} [{', '.join(attrs)}];\n")
    for u, lbl, v, mult, directed in _iter_export_edges(graph):
        attrs = [f'gen="{lbl}"']
        if mult > 1:
            attrs.append(f"mult={mult}")
        if not directed:
            attrs.append("dir=none")
        out.write(f"  v{u} -> v{v} [{', '.join(attrs)}];\n")
    out.write("}\n")
    return out.getvalue()


def _export_graphml(graph) -> str:
    out = StringIO()
    out.write('<?xml version="1.0" encoding="UTF-8"?>\n')
    out.write('<graphml xmlns="http://graphml.graphdrawing.org/xmlns">\n')
    out.write('  <key id="entropy_class" for="node" attr.name="entropy_class" attr.type="int"/>\n')
    out.write('  <key id="entropy_vector" for="node" attr.name="entropy_vector" attr.type="string"/>\n')
    out.write('  <key id="size" for="node" attr.name="size" attr.type="int"/>\n')
    out.write('  <key id="gen" for="edge" attr.name="gen" attr.type="string"/>\n')
    out.write('  <key id="mult" for="edge" attr.name="mult" attr.type="int"/>\n')
    out.write('  <graph edgedefault="directed">\n')
    for v, cid, size in _node_rows(graph):
        out.write(f'    <node id="v{v}">\n')
        out.write(f'      <data key="entropy_class">{cid}</data>\n')
        vec = _vector_attr(graph, cid) if cid >= 0 else ""
        if vec:
            out.write(f'      <data key="entropy_vector">{escape(vec)}</data>\n')
        out.write(f'      <data key="size">{size}</data>\n')
        out.write("    </node>\n")
    for u, lbl, v, mult, _directed in _iter_export_edges(graph):
        out.write(f'    <edge source="v{u}" target="v{v}">\n')
        out.write(f'      <data key="gen">{escape(lbl)}</data>\n')
        out.write(f'      <data key="mult">{mult}</data>\n')
        out.write("    </edge>\n")
    out.write("  </graph>\n</graphml>\n")
    return out.getvalue()


def _export_json(graph) -> str:
    import json as _json

    doc: dict = {
        "format": "coset-graphs/graph",
        "version": 1,
        "n": graph.n,
        "generators": list(graph.generator_labels),
        "kind": "reachability" if isinstance(graph, ReachabilityGraph) else "contracted",
    }
    nodes = []
    for v, cid, size in _node_rows(graph):
        node: dict = {"id": v, "entropy_class": cid, "size": size}
        if graph.class_vectors is not None and cid >= 0:
            node["entropy_vector"] = list(graph.class_vectors[cid].key)
        nodes.append(node)
    doc["vertices"] = nodes
    doc["edges"] = [
        {"source": u, "gen": lbl, "target": v, "mult": mult}
        for u, lbl, v, mult, _d in _iter_export_edges(graph)
    ]
    if isinstance(graph, ContractedGraph):
        doc["local_generators"] = list(graph.local_generator_labels)
        doc["local_order"] = graph.local_order
        doc["class_sizes"] = graph.class_sizes()
    return _json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _export_csv_summary(graph) -> str:
    lines = ["key,value"]
    lines.append(f"vertices,{graph.vertex_count}")
    edge_count = (
        sum(len(r) for r in graph.edges)
        if isinstance(graph, ReachabilityGraph)
        else sum(graph.edges.values())
    )
    lines.append(f"edges,{edge_count}")
    if graph.entropy_class is not None:
        lines.append(f"entropic_diversity,{entropic_diversity(graph)}")
    if isinstance(graph, ContractedGraph):
        lines.append(f"local_order,{graph.local_order}")
        sizes = ";".join(str(s) for s in graph.class_sizes())
        lines.append(f"class_sizes,{sizes}")
    return "\n".join(lines) + "\n"
