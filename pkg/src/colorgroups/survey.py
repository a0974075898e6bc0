"""Exhaustive census of coloring groups on small trees.

survey(n) walks every non-isomorphic tree on n vertices and every proper
edge coloring up to color relabeling and tree automorphism, analyzes the
coloring group, and aggregates one row per distinct fingerprint key.  The
symmetric-edge pruning option skips colorings that provably give the full
symmetric group, recording them on a fast path instead of running the
group engine.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .analysis import coloring_group, generators
from .graphs import EdgeColoredGraph, find_symmetric_edges, parse_graph, path_graph
from .group import Fingerprint, PermutationGroup
from .trees import Tree, free_trees, proper_colorings, tree_with_coloring

SURVEY_FULL_MAX = 10


@dataclass(frozen=True)
class SurveyRow:
    degree: int
    order: int
    primitive: bool
    color_count: int
    representative: str       # path word "1,2,1" or graph text
    is_path_word: bool
    fingerprint: Fingerprint
    assumed_symmetric: bool   # True when recorded by the pruning fast path

    def sort_key(self):
        return (self.order, self.fingerprint.key(), self.representative)

    def to_json_dict(self):
        return {
            "degree": self.degree,
            "order": self.order,
            "primitive": self.primitive,
            "color_count": self.color_count,
            "representative": self.representative,
            "is_path_word": self.is_path_word,
            "fingerprint": self.fingerprint.to_json_dict(),
            "assumed_symmetric": self.assumed_symmetric,
        }


def _representative(tree, coloring, graph):
    if tree.is_path():
        order = tree.path_order()
        word = []
        for a, b in zip(order, order[1:]):
            word.append(graph.edge_color(a, b))
        return ",".join(str(c) for c in word), True
    return graph.to_text(), False


def _symmetric_fast_row(tree, coloring, graph):
    """Row for a coloring skipped by the symmetric-edge pruning: the group
    is the full symmetric group, so only coloring-local data is computed."""
    n = graph.n
    taus = generators(graph)
    abelian = True
    for i, g in enumerate(taus):
        for h in taus[i + 1:]:
            if g * h != h * g:
                abelian = False
                break
        if not abelian:
            break
    fp = Fingerprint(
        degree=n,
        order=math.factorial(n),
        transitive=True,
        primitive=n >= 2,
        abelian=abelian,
        generator_cycle_types=tuple(sorted(g.cycle_type() for g in taus)),
        derived_order=None,
    )
    rep, is_path = _representative(tree, coloring, graph)
    return SurveyRow(degree=n, order=fp.order, primitive=fp.primitive,
                     color_count=graph.k, representative=rep,
                     is_path_word=is_path, fingerprint=fp,
                     assumed_symmetric=True)


def _analyzed_row(tree, coloring, graph):
    group = coloring_group(graph)
    fp = group.fingerprint()
    rep, is_path = _representative(tree, coloring, graph)
    return SurveyRow(degree=graph.n, order=fp.order, primitive=fp.primitive,
                     color_count=graph.k, representative=rep,
                     is_path_word=is_path, fingerprint=fp,
                     assumed_symmetric=False)


def survey_tree(tree, skip_symmetric_edge=False):
    """Rows for all colorings of one tree (not yet deduplicated)."""
    rows = []
    for coloring in proper_colorings(tree):
        graph = tree_with_coloring(tree, coloring)
        if skip_symmetric_edge and find_symmetric_edges(graph):
            rows.append(_symmetric_fast_row(tree, coloring, graph))
        else:
            rows.append(_analyzed_row(tree, coloring, graph))
    return rows


def _survey_tree_worker(args):
    n, tree_edges, skip = args
    return survey_tree(Tree(n, tree_edges), skip_symmetric_edge=skip)


def survey(n, skip_symmetric_edge=False, workers=1):
    """Census rows for degree n, deduplicated by fingerprint key and sorted
    by (order, fingerprint).  Full enumeration is supported for n <= 10."""
    if not 2 <= n <= SURVEY_FULL_MAX:
        raise ValueError(f"full survey supports 2 <= n <= {SURVEY_FULL_MAX}; "
                         f"larger degrees go through check_table_row")
    trees = free_trees(n)
    if workers > 1:
        import multiprocessing
        tasks = [(n, t.edges, skip_symmetric_edge) for t in trees]
        with multiprocessing.Pool(workers) as pool:
            per_tree = pool.map(_survey_tree_worker, tasks)
    else:
        per_tree = [survey_tree(t, skip_symmetric_edge) for t in trees]

    dedup = {}
    for rows in per_tree:
        for row in rows:
            key = row.fingerprint.key()
            if key not in dedup or row.sort_key() < dedup[key].sort_key():
                dedup[key] = row
    return sorted(dedup.values(), key=lambda r: r.sort_key())


def distinct_orders(rows):
    return sorted({row.order for row in rows})


def rows_to_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["order", "primitive", "k", "representative"])
    for row in rows:
        rep = row.representative if row.is_path_word \
            else row.representative.replace("\n", ";")
        writer.writerow([row.order, row.primitive, row.color_count, rep])
    return buf.getvalue()


def run_manifest(n, rows, seed, skip_symmetric_edge, workers, backend_name):
    """Run metadata; deliberately excludes wall-clock times so that the JSON
    output is byte-identical across runs (timings go to the log stream)."""
    return {
        "degree": n,
        "seed": seed,
        "skip_symmetric_edge": skip_symmetric_edge,
        "workers": workers,
        "backend": backend_name,
        "row_count": len(rows),
        "distinct_orders": distinct_orders(rows),
    }


# -- table spot checks -------------------------------------------------------------

def load_reference_rows():
    """Bundled transcription of the known small-tree coloring groups."""
    from importlib import resources
    text = resources.files("colorgroups").joinpath(
        "data/known_rows.json").read_text()
    return json.loads(text)


def check_table_row(entry):
    """Recompute (order, primitive) for one bundled row.

    Returns (order, primitive, passed).  The entry carries either a path
    word or a graph text.
    """
    if "path_word" in entry:
        graph = path_graph([int(c) for c in entry["path_word"].split(",")])
    else:
        graph = parse_graph(entry["graph"])
    group = coloring_group(graph)
    order = group.order()
    primitive = group.is_primitive()
    passed = (order == int(entry["order"])
              and primitive == bool(entry["primitive"]))
    return order, primitive, passed


def check_table(entries=None):
    """Run every bundled row; returns [(name, order, primitive, passed)]."""
    if entries is None:
        entries = load_reference_rows()
    results = []
    for entry in entries:
        order, primitive, passed = check_table_row(entry)
        results.append((entry["name"], order, primitive, passed))
    return results
