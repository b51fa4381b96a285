import logging

import numpy as np

import proofnet
import rbgraph
import satreduce

# Logger ayarları
logger = logging.getLogger(__name__)


def _rng(seed):
    # Generator verilirse olduğu gibi döner
    return np.random.default_rng(seed)


def random_matched_digraph(seed=None, pairs=3, density=0.3):
    """Köşeler v0..v(2k-1); eşleşme {v2i, v2i+1}; diğer sıralı çiftler olasılıkla yay olur"""
    rng = _rng(seed)
    vertices = [f"v{i}" for i in range(2 * pairs)]
    matching = set()
    for i in range(pairs):
        u, v = vertices[2 * i], vertices[2 * i + 1]
        matching.update(((u, v), (v, u)))
    arcs = {
        (u, v)
        for u in vertices
        for v in vertices
        if u != v and (u, v) not in matching and rng.random() < density
    }
    logger.debug("Rastgele çizge: %d köşe, %d yay", len(vertices), len(arcs))
    return rbgraph.build(vertices, matching, arcs)


def random_cnf(seed=None, variables=4, clauses=6, max_width=4, min_width=1):
    rng = _rng(seed)
    result = []
    for _ in range(clauses):
        width = int(rng.integers(min_width, max_width + 1))
        xs = rng.integers(1, variables + 1, size=width)
        signs = rng.choice((-1, 1), size=width)
        result.append(tuple(int(x) * int(s) for x, s in zip(xs, signs)))
    return satreduce.CnfInstance(result, tuple(range(1, variables + 1)))


def _random_dag(rng, inner, density, entry, exit_):
    order = [inner[i] for i in rng.permutation(len(inner))]
    arcs = set()
    for i, u in enumerate(order):
        for v in order[i + 1:]:
            if rng.random() < density:
                arcs.add((u, v))
        if rng.random() < density:
            arcs.add((entry, u))
        if rng.random() < density:
            arcs.add((u, exit_))
    return arcs


def random_dag_pair(seed=None, size=4, density=0.4):
    """Üst üste bindirme varsayımlarını sağlayan (G1, G2) çifti"""
    rng = _rng(seed)
    inner = [f"a{i}" for i in range(size)]
    vertices = frozenset(inner) | {satreduce.SOURCE, satreduce.SINK}
    g1 = _random_dag(rng, inner, density, satreduce.SOURCE, satreduce.SINK)
    g2 = _random_dag(rng, inner, density, satreduce.SINK, satreduce.SOURCE)
    return (
        satreduce.OccurrenceDag(vertices, frozenset(g1), "clause"),
        satreduce.OccurrenceDag(vertices, frozenset(g2), "variable"),
    )


def random_formula(seed=None, atoms=4, names=3):
    rng = _rng(seed)
    connectives = list(proofnet.CONNECTIVES.values())

    def grow(n):
        if n == 1:
            name = f"p{int(rng.integers(names))}"
            return proofnet.Atom(name, bool(rng.integers(2)))
        split = int(rng.integers(1, n))
        kind = connectives[int(rng.integers(len(connectives)))]
        return kind(grow(split), grow(n - split))

    return grow(atoms)
