import logging
from dataclasses import dataclass
from itertools import product

import networkx as nx

import rbgraph

# Logger ayarları
logger = logging.getLogger(__name__)

SOURCE, SINK = "s", "t"
S1, S2, T1, T2 = "s1", "s2", "t1", "t2"


class ReductionError(ValueError):
    """satreduce hatalarının ortak tabanı"""


class DimacsError(ReductionError):
    def __init__(self, line, message):
        super().__init__(f"Satır {line}: {message}")
        self.line = line


class MissingPolarity(ReductionError):
    def __init__(self, variable):
        super().__init__(f"x{variable} değişkeninin iki kutbu da geçmeli")
        self.variable = variable


class HypothesisViolation(ReductionError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("Üst üste bindirme varsayımları sağlanmıyor: " + "; ".join(self.problems))


class MalformedWitness(ReductionError):
    pass


class InternalError(ReductionError):
    pass


@dataclass(frozen=True)
class CnfInstance:
    clauses: tuple
    variables: tuple = None

    def __post_init__(self):
        clauses = tuple(tuple(int(lit) for lit in clause) for clause in self.clauses)
        used = {abs(lit) for clause in clauses for lit in clause}
        if 0 in used:
            raise ReductionError("Literal 0 olamaz")
        if self.variables is None:
            variables = tuple(range(1, max(used, default=0) + 1))
        else:
            variables = tuple(sorted(set(self.variables)))
            missing = used - set(variables)
            if missing:
                raise ReductionError(f"Tanımsız değişkenler: {sorted(missing)}")
        object.__setattr__(self, "clauses", clauses)
        object.__setattr__(self, "variables", variables)

    def used_variables(self):
        return tuple(sorted({abs(lit) for clause in self.clauses for lit in clause}))

    def occurrences(self):
        """Geçiş adı -> (i, j, literal); i ve j 1'den başlar"""
        return {
            occurrence_name(i, j): (i, j, lit)
            for i, clause in enumerate(self.clauses, 1)
            for j, lit in enumerate(clause, 1)
        }


def occurrence_name(i, j):
    return f"v{i}_{j}"


@dataclass(frozen=True)
class Assignment:
    true_vars: frozenset
    variables: tuple

    def value(self, x):
        return x in self.true_vars

    def literal_value(self, lit):
        return self.value(lit) if lit > 0 else not self.value(-lit)

    def satisfies(self, inst):
        return all(any(self.literal_value(lit) for lit in clause) for clause in inst.clauses)

    def __str__(self):
        return " ".join(
            f"x{x}={'true' if self.value(x) else 'false'}" for x in self.variables
        )


@dataclass(frozen=True)
class Normalized:
    instance: CnfInstance
    shortcut: str = None  # "SAT", "UNSAT" ya da None
    added: tuple = ()


def normalize_cnf(inst):
    if not inst.clauses:
        return Normalized(inst, "SAT")
    if any(len(clause) == 0 for clause in inst.clauses):
        return Normalized(inst, "UNSAT")
    literals = {lit for clause in inst.clauses for lit in clause}
    added = tuple(
        (x, -x) for x in inst.used_variables() if x not in literals or -x not in literals
    )
    if added:
        logger.info("Normalleştirme %d totoloji yan tümcesi ekledi", len(added))
    normalized = CnfInstance(inst.clauses + added, inst.used_variables())
    return Normalized(normalized, None, added)


@dataclass(frozen=True)
class OccurrenceDag:
    vertices: frozenset
    arcs: frozenset
    role: str  # "clause" ya da "variable"

    def to_networkx(self):
        g = nx.DiGraph()
        g.add_nodes_from(rbgraph.ordered(self.vertices))
        g.add_edges_from(rbgraph.ordered_arcs(self.arcs))
        return g

    def is_acyclic(self):
        return nx.is_directed_acyclic_graph(self.to_networkx())


def build_gcl(inst):
    layers = [
        [occurrence_name(i, j) for j in range(1, len(clause) + 1)]
        for i, clause in enumerate(inst.clauses, 1)
    ]
    vertices = {SOURCE, SINK}.union(*layers)
    if not layers:
        return OccurrenceDag(frozenset(vertices), frozenset({(SOURCE, SINK)}), "clause")
    arcs = {(SOURCE, v) for v in layers[0]} | {(v, SINK) for v in layers[-1]}
    for upper, lower in zip(layers, layers[1:]):
        arcs.update(product(upper, lower))
    return OccurrenceDag(frozenset(vertices), frozenset(arcs), "clause")


def build_gvar(inst):
    """Değişken DAG'ı: t'den s'ye her yol bir atamanın yanlış literallerini gezer.

    Geçişler (i, j) sözlük sırasıyla sıralanır; aynı yan tümcede tekrar eden
    literal ayrı geçiş olarak kalır.
    """
    occ = {}
    for name, (_, _, lit) in sorted(inst.occurrences().items(), key=lambda kv: kv[1][:2]):
        occ.setdefault(lit, []).append(name)
    vertices = {SOURCE, SINK} | set(inst.occurrences())
    variables = inst.variables
    if not variables:
        return OccurrenceDag(frozenset(vertices), frozenset({(SINK, SOURCE)}), "variable")
    for x in variables:
        if not occ.get(x) or not occ.get(-x):
            raise MissingPolarity(x)

    arcs = set()
    for x in variables:
        for lit in (x, -x):
            arcs.update(zip(occ[lit], occ[lit][1:]))
    for x, y in zip(variables, variables[1:]):
        for a, b in product((x, -x), (y, -y)):
            arcs.add((occ[a][-1], occ[b][0]))
    first, last = variables[0], variables[-1]
    arcs.update((SINK, occ[lit][0]) for lit in (first, -first))
    arcs.update((occ[lit][-1], SOURCE) for lit in (last, -last))
    return OccurrenceDag(frozenset(vertices), frozenset(arcs), "variable")


def up(v):
    return f"{v}u"


def down(v):
    return f"{v}d"


@dataclass(frozen=True)
class SuperimposedGraph:
    graph: rbgraph.MatchedDigraph
    arcs1: frozenset
    arcs2: frozenset
    map: rbgraph.ReductionMap


def hypothesis_problems(g1, g2):
    problems = []
    if g1.vertices != g2.vertices:
        problems.append("G1 ve G2 köşe kümeleri farklı")
    for label, g in (("G1", g1), ("G2", g2)):
        if not {SOURCE, SINK} <= g.vertices:
            problems.append(f"{label} s ve t köşelerini içermeli")
        if not g.is_acyclic():
            problems.append(f"{label} döngüsüz değil")
    if any(v == SOURCE for _, v in g1.arcs):
        problems.append("s köşesine G1'de giren yay var")
    if any(u == SINK for u, _ in g1.arcs):
        problems.append("t köşesinden G1'de çıkan yay var")
    if any(v == SINK for _, v in g2.arcs):
        problems.append("t köşesine G2'de giren yay var")
    if any(u == SOURCE for u, _ in g2.arcs):
        problems.append("s köşesinden G2'de çıkan yay var")
    return problems


def mixed_graphs_acyclic(sg):
    """(V', M ∪ A'1) ve (V', M ∪ A'2) döngüsüz mü.

    Eşleşme kenarları dönüşümlü devrenin onları geçtiği yönde alınır:
    G'1 içinde v↑ -> v↓, G'2 içinde v↓ -> v↑; iki tarafta da t1 -> t2 ve s2 -> s1.
    """
    inner = [v for v in sg.map.forward if v not in (SOURCE, SINK)]
    glue = [(T1, T2), (S2, S1)]
    first = nx.DiGraph(list(sg.arcs1) + [(up(v), down(v)) for v in inner] + glue)
    second = nx.DiGraph(list(sg.arcs2) + [(down(v), up(v)) for v in inner] + glue)
    return nx.is_directed_acyclic_graph(first) and nx.is_directed_acyclic_graph(second)


def superimpose(g1, g2):
    problems = hypothesis_problems(g1, g2)
    inner = rbgraph.ordered(g1.vertices - {SOURCE, SINK})
    names = {S1, S2, T1, T2} | {up(v) for v in inner} | {down(v) for v in inner}
    if len(names) != 4 + 2 * len(inner):
        problems.append("Köşe adları çakışıyor")
    if problems:
        raise HypothesisViolation(problems)

    matching = {(S1, S2), (S2, S1), (T1, T2), (T2, T1)}
    for v in inner:
        matching.update(((up(v), down(v)), (down(v), up(v))))

    arcs1 = set()
    for u, v in g1.arcs:
        if (u, v) == (SOURCE, SINK):
            arcs1.add((S1, T1))
        elif u == SOURCE:
            arcs1.add((S1, up(v)))
        elif v == SINK:
            arcs1.add((down(u), T1))
        else:
            arcs1.add((down(u), up(v)))
    arcs2 = set()
    for u, v in g2.arcs:
        if (u, v) == (SINK, SOURCE):
            arcs2.add((T2, S2))
        elif u == SINK:
            arcs2.add((T2, down(v)))
        elif v == SOURCE:
            arcs2.add((up(u), S2))
        else:
            arcs2.add((up(u), down(v)))

    graph = rbgraph.build(names, matching, arcs1 | arcs2)
    forward = {v: (up(v), down(v)) for v in inner}
    forward[SOURCE] = (S1, S2)
    forward[SINK] = (T1, T2)
    backward = {x: v for v, pair in forward.items() for x in pair}
    sg = SuperimposedGraph(graph, frozenset(arcs1), frozenset(arcs2), rbgraph.ReductionMap(forward, backward))
    if not mixed_graphs_acyclic(sg):
        raise InternalError("Üst üste bindirilmiş yarılardan biri döngülü")
    logger.debug("Üst üste bindirme: %d köşe, %d + %d yay", len(names), len(arcs1), len(arcs2))
    return sg


@dataclass(frozen=True)
class Encoding:
    original: CnfInstance
    normalized: Normalized
    gcl: OccurrenceDag = None
    gvar: OccurrenceDag = None
    superimposed: SuperimposedGraph = None

    @property
    def shortcut(self):
        return self.normalized.shortcut


def encode(inst):
    normalized = normalize_cnf(inst)
    if normalized.shortcut is not None:
        logger.info("Kısa yol: %s, çizge kurulmadı", normalized.shortcut)
        return Encoding(inst, normalized)
    gcl = build_gcl(normalized.instance)
    gvar = build_gvar(normalized.instance)
    return Encoding(inst, normalized, gcl, gvar, superimpose(gcl, gvar))


def degenerate_encoding(sat):
    """Kısa yol örnekleri için s ve t'den oluşan çizge; tek devresi SAT demektir"""
    vertices = frozenset({SOURCE, SINK})
    gcl = OccurrenceDag(vertices, frozenset({(SOURCE, SINK)} if sat else ()), "clause")
    gvar = OccurrenceDag(vertices, frozenset({(SINK, SOURCE)} if sat else ()), "variable")
    return superimpose(gcl, gvar)


def decode_circuit(enc, w):
    if enc.superimposed is None:
        raise MalformedWitness("Kısa yol örneğinin çizgesi yok")
    sg = enc.superimposed
    if w is None or not rbgraph.is_alternating_circuit(sg.graph, w):
        raise MalformedWitness("Tanık kodlanmış çizgede alternatif devre değil")
    steps = w.circuit.steps()
    if steps.count((T1, T2)) != 1 or steps.count((S2, S1)) != 1:
        raise InternalError("Devre (t1, t2) ve (s2, s1) kenarlarını birer kez geçmeli")

    seq = w.circuit.rotated(w.seq.index(T2)).seq
    variable_part = seq[: seq.index(S2)]
    visited = []
    for x in variable_part:
        v = sg.map.source_of(x)
        if v not in (SOURCE, SINK) and (not visited or visited[-1] != v):
            visited.append(v)

    occurrences = enc.normalized.instance.occurrences()
    values = {}
    for name in visited:
        lit = occurrences[name][2]
        # gezilen literaller yanlış
        value = lit < 0
        if values.setdefault(abs(lit), value) != value:
            raise InternalError(f"x{abs(lit)} hem doğru hem yanlış okundu")
    undecided = [x for x in enc.normalized.instance.variables if x not in values]
    if undecided:
        raise InternalError(f"Değişken yolu bazı değişkenleri gezmiyor: {undecided}")

    assignment = Assignment(
        frozenset(x for x, value in values.items() if value), enc.original.variables
    )
    if not assignment.satisfies(enc.original):
        raise InternalError("Çözülen atama tüm yan tümceleri sağlamıyor")
    return assignment


@dataclass(frozen=True)
class SolveResult:
    satisfiable: bool
    assignment: Assignment = None
    witness: object = None
    encoding: Encoding = None

    def __str__(self):
        return f"SAT {self.assignment}".rstrip() if self.satisfiable else "UNSAT"


def solve(inst, budget=None):
    enc = encode(inst)
    if enc.shortcut == "SAT":
        return SolveResult(True, Assignment(frozenset(), inst.variables), encoding=enc)
    if enc.shortcut == "UNSAT":
        return SolveResult(False, encoding=enc)
    w = rbgraph.find_alternating_circuit(
        enc.superimposed.graph, budget=budget, prefer=[(S2, S1)]
    )
    if w is None:
        return SolveResult(False, encoding=enc)
    return SolveResult(True, decode_circuit(enc, w), w, enc)


def parse_dimacs(text):
    declared_vars = declared_clauses = None
    clauses, current = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if declared_vars is not None:
                raise DimacsError(lineno, "İkinci 'p' başlığı")
            if len(parts) != 4 or parts[1] != "cnf" or not (parts[2].isdigit() and parts[3].isdigit()):
                raise DimacsError(lineno, f"Geçersiz başlık: {line!r}")
            declared_vars, declared_clauses = int(parts[2]), int(parts[3])
            continue
        if declared_vars is None:
            raise DimacsError(lineno, "'p cnf' başlığından önce yan tümce")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise DimacsError(lineno, f"Geçersiz literal: {token!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > declared_vars:
                raise DimacsError(lineno, f"Değişken bildirilen sayıyı aşıyor: {lit}")
            else:
                current.append(lit)
    if declared_vars is None:
        raise DimacsError(0, "'p cnf' başlığı yok")
    if current:
        logger.warning("Son yan tümce 0 ile bitmiyor, yine de eklendi")
        clauses.append(tuple(current))
    if len(clauses) != declared_clauses:
        logger.warning("Başlık %d yan tümce bildiriyor, %d okundu", declared_clauses, len(clauses))
    return CnfInstance(clauses, tuple(range(1, declared_vars + 1)))


def format_dimacs(inst):
    lines = [f"p cnf {max(inst.variables, default=0)} {len(inst.clauses)}"]
    lines.extend(" ".join(str(lit) for lit in clause + (0,)) for clause in inst.clauses)
    return "\n".join(lines) + "\n"
