"""Kaba kuvvet referansları.

Testlerin hakemi olarak kullanılır; hızlı yollardan bağımsız kalmaları için
arama yerine numaralandırma ve networkx kullanırlar.
"""
import logging
from itertools import product

import networkx as nx
import numpy as np

import rbgraph
import satreduce

# Logger ayarları
logger = logging.getLogger(__name__)

# Koruma sınırları
SAT_MAX_VARIABLES = 24
CIRCUIT_MAX_VERTICES = 16
PATH_LIMIT = 10**6


class OracleError(ValueError):
    """oracles hatalarının ortak tabanı"""


class TooLarge(OracleError):
    def __init__(self, size, limit):
        super().__init__(f"Girdi kaba kuvvet için çok büyük: {size} > {limit}")
        self.size, self.limit = size, limit


class CyclicInput(OracleError):
    pass


def _assignments(variables):
    # x1 en anlamlı bit, false önce
    for values in product((False, True), repeat=len(variables)):
        yield satreduce.Assignment(
            frozenset(x for x, value in zip(variables, values) if value), variables
        )


def _check_variables(inst, limit):
    limit = SAT_MAX_VARIABLES if limit is None else limit
    if len(inst.variables) > limit:
        raise TooLarge(len(inst.variables), limit)


def brute_force_sat(inst, limit=None):
    _check_variables(inst, limit)
    for assignment in _assignments(inst.variables):
        if assignment.satisfies(inst):
            return assignment
    return None


def count_models(inst, limit=None):
    _check_variables(inst, limit)
    return sum(1 for a in _assignments(inst.variables) if a.satisfies(inst))


def count_choice_models(inst, limit=None):
    """Σ_Y Π_i (i. yan tümcede doğru olan geçiş sayısı)"""
    _check_variables(inst, limit)
    total = 0
    for assignment in _assignments(inst.variables):
        weight = 1
        for clause in inst.clauses:
            weight *= sum(1 for lit in clause if assignment.literal_value(lit))
        total += weight
    return total


def _acyclic_digraph(dag):
    g = dag.to_networkx() if isinstance(dag, satreduce.OccurrenceDag) else dag
    if not nx.is_directed_acyclic_graph(g):
        raise CyclicInput("Girdi çizgesi döngülü")
    return g


def enumerate_st_paths(dag, source, target, limit=None):
    limit = PATH_LIMIT if limit is None else limit
    g = _acyclic_digraph(dag)
    paths = []
    for path in nx.all_simple_paths(g, source, target):
        paths.append(tuple(path))
        if len(paths) > limit:
            raise TooLarge(len(paths), limit)
    return sorted(paths, key=lambda p: [str(v) for v in p])


def count_st_paths(dag, source, target):
    """Komşuluk matrisinin kuvvetleriyle yol sayısı"""
    g = _acyclic_digraph(dag)
    nodes = rbgraph.ordered(g.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    adjacency = nx.to_numpy_array(g, nodelist=nodes, dtype=np.int64)
    walks = np.eye(len(nodes), dtype=np.int64)
    total = 0
    for _ in range(len(nodes)):
        walks = walks @ adjacency
        total += int(walks[index[source], index[target]])
        if not walks.any():
            break
    return total


def _alternating_labels(g, seq):
    n = len(seq)
    if n % 2:
        return None
    for first_is_matching in (True, False):
        labels = []
        for i in range(n):
            u, v = seq[i], seq[(i + 1) % n]
            is_matching = (i % 2 == 0) == first_is_matching
            if not (g.is_matching(u, v) if is_matching else g.is_nonmatching(u, v)):
                break
            labels.append(is_matching)
        else:
            return tuple(labels)
    return None


def enumerate_alternating_circuits(g, limit=None):
    limit = CIRCUIT_MAX_VERTICES if limit is None else limit
    if len(g.vertices) > limit:
        raise TooLarge(len(g.vertices), limit)
    digraph = nx.DiGraph()
    digraph.add_nodes_from(rbgraph.ordered(g.vertices))
    digraph.add_edges_from(rbgraph.ordered_arcs(g.matching | g.arcs))
    found = {}
    for cycle in nx.simple_cycles(digraph):
        labels = _alternating_labels(g, cycle)
        if labels is None:
            continue
        witness = rbgraph.AltCircuitWitness(rbgraph.Circuit(cycle), labels)
        first = min(range(len(cycle)), key=lambda i: str(cycle[i]))
        witness = witness.rotated(first)
        found.setdefault(witness.seq, witness)
    logger.debug("%d alternatif devre numaralandırıldı", len(found))
    return [found[seq] for seq in sorted(found, key=lambda s: [str(v) for v in s])]


def count_disjoint_path_pairs(g1, g2):
    problems = satreduce.hypothesis_problems(g1, g2)
    if problems:
        raise satreduce.HypothesisViolation(problems)
    ends = {satreduce.SOURCE, satreduce.SINK}
    forward = enumerate_st_paths(g1, satreduce.SOURCE, satreduce.SINK)
    backward = enumerate_st_paths(g2, satreduce.SINK, satreduce.SOURCE)
    inner = [set(p) - ends for p in backward]
    return sum(1 for p in forward for q in inner if not (set(p) - ends) & q)
