import logging
from collections import Counter
from dataclasses import dataclass
from functools import reduce

import proofnet
import rbgraph
from proofnet import Atom, Before, Par, Tensor

# Logger ayarları
logger = logging.getLogger(__name__)

BUNDLE_SHAPES = ("left", "right", "balanced")


class ProofifyError(ValueError):
    """proofify hatalarının ortak tabanı"""


class IsolatedMatchedPair(ProofifyError):
    def __init__(self, u, v):
        super().__init__(
            f"Eşleşme çifti {{{u}, {v}}} için eşleşme dışı yay eksik "
            "(--drop-isolated ile çıkarılabilir)"
        )
        self.u, self.v = u, v


class MalformedWitness(ProofifyError):
    pass


@dataclass(frozen=True)
class EdgeClassification:
    matching: tuple  # {u, v} çiftleri, u < v
    undirected: tuple  # iki yönü de olan eşleşme dışı kenarlar, u < v
    directed: tuple  # tersi olmayan yaylar (u, v)


@dataclass(frozen=True)
class ProofifyOutput:
    structure: proofnet.ProofStructure
    map: rbgraph.ReductionMap
    classification: EdgeClassification
    source: rbgraph.MatchedDigraph


def _incidence(g):
    incident = Counter()
    for u, v in g.arcs:
        incident[u] += 1
        incident[v] += 1
    return incident


def classify(g):
    incident = _incidence(g)
    for u, v in g.pairs():
        if incident[u] == 0 or incident[v] == 0:
            raise IsolatedMatchedPair(u, v)
    undirected, directed = [], []
    for u, v in rbgraph.ordered_arcs(g.arcs):
        if (v, u) in g.arcs:
            if str(u) < str(v):
                undirected.append((u, v))
        else:
            directed.append((u, v))
    return EdgeClassification(tuple(g.pairs()), tuple(undirected), tuple(directed))


def drop_isolated(g):
    """Eşleşme dışı yayı olmayan çiftleri sabit noktaya kadar çıkar"""
    vertices, matching, arcs = set(g.vertices), set(g.matching), set(g.arcs)
    dropped = 0
    while True:
        incident = Counter()
        for u, v in arcs:
            incident[u] += 1
            incident[v] += 1
        doomed = {
            x
            for u, v in matching
            if incident[u] == 0 or incident[v] == 0
            for x in (u, v)
        }
        if not doomed:
            break
        dropped += len(doomed) // 2
        vertices -= doomed
        matching = {(u, v) for u, v in matching if u not in doomed}
        arcs = {(u, v) for u, v in arcs if u not in doomed and v not in doomed}
    if dropped:
        logger.info("%d izole eşleşme çifti çıkarıldı", dropped)
    return rbgraph.build(vertices, matching, arcs)


def _bundle(ports, shape):
    if len(ports) == 1:
        return ports[0]
    if shape == "left":
        return reduce(Par, ports)
    if shape == "right":
        return reduce(lambda acc, p: Par(p, acc), reversed(ports))
    mid = len(ports) // 2
    return Par(_bundle(ports[:mid], shape), _bundle(ports[mid:], shape))


def proofify(g, shape="left"):
    """Eşleşmeli yönlü çizgeyi pomset ispat yapısına çevir.

    Eşleşme kenarları ⊗ bağı, çift yönlü kenarlar aksiyom, tek yönlü yaylar
    iki aksiyom ve bir < bağından oluşan araç olur.
    """
    if shape not in BUNDLE_SHAPES:
        raise ProofifyError(f"Bilinmeyen demet biçimi: {shape}")
    cls = classify(g)
    ports = {v: [] for v in g.vertices}
    links = []
    befores = []
    edges = {}

    for k, (u, v) in enumerate(cls.undirected):
        label = f"e{k}"
        pu, pv = Atom(label), Atom(label, True)
        ports[u].append(pu)
        ports[v].append(pv)
        links.append((pu, pv))
        edges[f"edge {label} {u}--{v}"] = (pu, pv)

    for k, (u, v) in enumerate(cls.directed):
        label = f"d{k}"
        pu, lam = Atom(f"{label}_1"), Atom(f"{label}_1", True)
        rho, pv = Atom(f"{label}_2"), Atom(f"{label}_2", True)
        ports[u].append(pu)
        ports[v].append(pv)
        links += [(pu, lam), (rho, pv)]
        befores.append(Before(lam, rho))
        edges[f"edge {label} {u}->{v}"] = (pu, lam, rho, pv)

    conclusions = [
        Tensor(_bundle(ports[u], shape), _bundle(ports[v], shape)) for u, v in cls.matching
    ]
    conclusions += befores

    address = {
        atom: proofnet.Address(i, path)
        for i, conc in enumerate(conclusions)
        for path, atom in proofnet.leaves(conc)
    }
    structure = proofnet.ProofStructure(
        conclusions, [(address[a], address[b]) for a, b in links]
    )

    forward, backward = {}, {}
    for v in rbgraph.ordered(g.vertices):
        forward[f"vertex {v}"] = tuple(address[p] for p in ports[v])
        for p in ports[v]:
            backward[address[p]] = v
    for key, atoms in edges.items():
        forward[key] = tuple(address[a] for a in atoms)

    logger.debug(
        "proofify: %d eşleşme, %d çift yönlü, %d tek yönlü",
        len(cls.matching), len(cls.undirected), len(cls.directed),
    )
    return ProofifyOutput(structure, rbgraph.ReductionMap(forward, backward), cls, g)


def lift_witness(out, w):
    """RB çizgesindeki tanığı kaynak çizgedeki devreye taşı"""
    if w is None:
        raise MalformedWitness("Tanık verilmedi")
    graph, rmap = proofnet.to_rb(out.structure)
    if not rbgraph.is_alternating_circuit(graph, w):
        raise MalformedWitness("Tanık RB çizgesinde alternatif devre değil")
    seq = []
    for x in w.seq:
        vertex = out.map.source_of(rmap.source_of(x))
        if vertex is not None and (not seq or seq[-1] != vertex):
            seq.append(vertex)
    if len(seq) > 1 and seq[0] == seq[-1]:
        seq.pop()
    lifted = rbgraph.witness_for(out.source, seq)
    if lifted is None:
        raise ProofifyError(f"Tanık kaynak devreye dönüşmedi: {seq}")
    return lifted.circuit
