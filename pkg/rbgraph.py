import logging
from collections import deque
from dataclasses import dataclass, field

# Logger ayarları
logger = logging.getLogger(__name__)

# Arama ayarları
DEFAULT_BUDGET = None  # düğüm genişletme sınırı, None = sınırsız


def _key(item):
    return str(item)


def _arc_key(arc):
    return (str(arc[0]), str(arc[1]))


def ordered(items):
    """Köşeleri belirleyici sırada döndür"""
    return sorted(items, key=_key)


def ordered_arcs(arcs):
    return sorted(arcs, key=_arc_key)


class GraphError(ValueError):
    """rbgraph hatalarının ortak tabanı"""


class SelfLoop(GraphError):
    def __init__(self, vertex):
        super().__init__(f"Kendi üzerine dönen yay: ({vertex}, {vertex})")
        self.vertex = vertex


class UnknownVertex(GraphError):
    def __init__(self, vertex):
        super().__init__(f"Tanımsız köşe: {vertex}")
        self.vertex = vertex


class MatchingNotSubsetOfArcs(GraphError):
    def __init__(self, u, v):
        super().__init__(f"Eşleşme yayı yay kümesinde yok: ({u}, {v})")
        self.u, self.v = u, v


class VertexNotPerfectlyMatched(GraphError):
    def __init__(self, vertex, outgoing, incoming):
        super().__init__(
            f"Köşe tam eşleşmemiş: {vertex} "
            f"({outgoing} çıkan, {incoming} giren eşleşme yayı)"
        )
        self.vertex = vertex
        self.outgoing = outgoing
        self.incoming = incoming


class MatchingNotSymmetric(GraphError):
    def __init__(self, u, v):
        super().__init__(f"Eşleşme simetrik değil: ({u}, {v}) var, ({v}, {u}) yok")
        self.u, self.v = u, v


class InvalidGraph(GraphError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(str(p) for p in self.problems))


class GraphSyntaxError(GraphError):
    def __init__(self, line, message):
        super().__init__(f"Satır {line}: {message}")
        self.line = line


class MalformedCircuit(GraphError):
    pass


class ResourceLimit(GraphError):
    def __init__(self, budget):
        super().__init__(f"Arama bütçesi aşıldı ({budget} genişletme)")
        self.budget = budget


def _structural_problems(vertices, matching, arcs):
    problems = []
    for u, v in ordered_arcs(matching | arcs):
        if u == v:
            problems.append(SelfLoop(u))
    unknown = {x for arc in matching | arcs for x in arc if x not in vertices}
    problems.extend(UnknownVertex(x) for x in ordered(unknown))
    for u, v in ordered_arcs(matching):
        if (v, u) not in matching:
            problems.append(MatchingNotSymmetric(u, v))
    outgoing = {v: 0 for v in vertices}
    incoming = {v: 0 for v in vertices}
    for u, v in matching:
        if u in outgoing:
            outgoing[u] += 1
        if v in incoming:
            incoming[v] += 1
    for v in ordered(vertices):
        if outgoing[v] != 1 or incoming[v] != 1:
            problems.append(VertexNotPerfectlyMatched(v, outgoing[v], incoming[v]))
    return problems


@dataclass(frozen=True)
class MatchedDigraph:
    """Tam eşleşmeli yönlü çizge (V, A, M).

    `arcs` yalnızca eşleşme dışı yayları tutar; iç kurucular bir eşleşme
    yayına paralel eşleşme dışı yay ekleyebilir.
    """

    vertices: frozenset
    matching: frozenset
    arcs: frozenset
    _partner: dict = field(init=False, repr=False, compare=False, hash=False)
    _succ: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        for name in ("vertices", "matching", "arcs"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        problems = _structural_problems(self.vertices, self.matching, self.arcs)
        if problems:
            raise InvalidGraph(problems)
        succ = {v: [] for v in self.vertices}
        for u, v in self.arcs:
            succ[u].append(v)
        object.__setattr__(self, "_partner", {u: v for u, v in self.matching})
        object.__setattr__(self, "_succ", {v: tuple(ordered(ws)) for v, ws in succ.items()})

    def partner(self, v):
        return self._partner[v]

    def successors(self, v):
        """Eşleşme dışı yaylarla ulaşılan komşular (sıralı)"""
        return self._succ[v]

    def pairs(self):
        """Her eşleşme kenarı bir kez, küçük uç önce"""
        return [(u, v) for u, v in ordered_arcs(self.matching) if _key(u) < _key(v)]

    def is_matching(self, u, v):
        return (u, v) in self.matching

    def is_nonmatching(self, u, v):
        return (u, v) in self.arcs


def build(vertices, matching, nonmatching):
    """Etiketli kurucu: eşleşme ve eşleşme dışı yaylar ayrı verilir"""
    return MatchedDigraph(frozenset(vertices), frozenset(matching), frozenset(nonmatching))


def validate(vertices, arcs, matching):
    """Düz bir (V, A, M) üçlüsünü doğrula; eşleşme dışı yaylar A \\ M olur."""
    vertices = frozenset(vertices)
    arcs = frozenset(arcs)
    matching = frozenset(matching)
    problems = [MatchingNotSubsetOfArcs(u, v) for u, v in ordered_arcs(matching - arcs)]
    problems.extend(_structural_problems(vertices, matching, arcs - matching))
    if problems:
        raise InvalidGraph(problems)
    return MatchedDigraph(vertices, matching, arcs - matching)


def reverse(g):
    # eşleşme simetrik olduğu için değişmez
    return MatchedDigraph(g.vertices, g.matching, frozenset((v, u) for u, v in g.arcs))


@dataclass(frozen=True)
class Circuit:
    seq: tuple

    def __post_init__(self):
        seq = tuple(self.seq)
        if len(seq) < 2:
            raise MalformedCircuit(f"Devre en az 2 köşe içermeli: {seq}")
        if len(set(seq)) != len(seq):
            raise MalformedCircuit(f"Devrede tekrar eden köşe var: {seq}")
        object.__setattr__(self, "seq", seq)

    def __len__(self):
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def steps(self):
        n = len(self.seq)
        return [(self.seq[i], self.seq[(i + 1) % n]) for i in range(n)]

    def rotated(self, k):
        k %= len(self.seq)
        return Circuit(self.seq[k:] + self.seq[:k])

    def reversed(self):
        return Circuit(tuple(reversed(self.seq)))

    def canonical(self):
        """En küçük köşeden başlayan dönüşüm"""
        first = min(range(len(self.seq)), key=lambda i: _key(self.seq[i]))
        return self.rotated(first)

    def __str__(self):
        return " ".join(str(v) for v in self.seq)


@dataclass(frozen=True)
class AltCircuitWitness:
    circuit: Circuit
    labels: tuple  # labels[i]: seq[i] -> seq[i+1] adımı eşleşme yayı mı

    def __post_init__(self):
        labels = tuple(bool(x) for x in self.labels)
        n = len(self.circuit)
        if len(labels) != n:
            raise MalformedCircuit("Etiket sayısı devre uzunluğuna eşit değil")
        if any(labels[i] == labels[(i + 1) % n] for i in range(n)):
            raise MalformedCircuit("Etiketler dönüşümlü değil")
        object.__setattr__(self, "labels", labels)

    @property
    def seq(self):
        return self.circuit.seq

    def __len__(self):
        return len(self.circuit)

    def matching_steps(self):
        return [step for step, m in zip(self.circuit.steps(), self.labels) if m]

    def nonmatching_steps(self):
        return [step for step, m in zip(self.circuit.steps(), self.labels) if not m]

    def rotated(self, k):
        k %= len(self.labels)
        return AltCircuitWitness(self.circuit.rotated(k), self.labels[k:] + self.labels[:k])

    def reversed(self):
        # ters çevrilen adım i, eski adım n-2-i olur
        n = len(self.labels)
        return AltCircuitWitness(
            self.circuit.reversed(),
            tuple(self.labels[(n - 2 - i) % n] for i in range(n)),
        )

    def __str__(self):
        return str(self.circuit)


def _labels_for(g, seq):
    n = len(seq)
    if n < 2 or n % 2 or len(set(seq)) != n:
        return None
    if any(v not in g.vertices for v in seq):
        return None
    steps = [(seq[i], seq[(i + 1) % n]) for i in range(n)]
    for parity in (0, 1):
        labels = tuple(i % 2 == parity for i in range(n))
        if all(
            g.is_matching(*step) if m else g.is_nonmatching(*step)
            for step, m in zip(steps, labels)
        ):
            return labels
    return None


def witness_for(g, seq):
    """Dizi alternatif devreyse tanığını, değilse None döndür"""
    try:
        seq = tuple(seq)
        labels = _labels_for(g, seq)
    except TypeError:
        return None
    if labels is None:
        return None
    return AltCircuitWitness(Circuit(seq), labels)


def is_alternating_circuit(g, c):
    if isinstance(c, AltCircuitWitness):
        steps = c.circuit.steps()
        if _labels_for(g, c.seq) is None:
            return False
        return all(
            (step in g.matching) if m else (step in g.arcs)
            for step, m in zip(steps, c.labels)
        )
    if isinstance(c, Circuit):
        c = c.seq
    return witness_for(g, c) is not None


class _Search:
    def __init__(self, g, rank, budget, prune):
        self.g = g
        self.rank = rank
        self.budget = budget
        self.prune = prune
        self.expansions = 0

    def _count(self):
        self.expansions += 1
        if self.budget is not None and self.expansions > self.budget:
            raise ResourceLimit(self.budget)

    def _can_return(self, y, start, visited, k):
        # ziyaret edilmemiş köşeler üzerinden başlangıca dönüşümlü bir yürüyüş var mı
        seen = set()
        queue = deque([y])
        while queue:
            x = queue.popleft()
            for z in self.g.successors(x):
                if z == start:
                    return True
                if z in visited or z in seen or self.rank[z] < k:
                    continue
                seen.add(z)
                queue.append(self.g.partner(z))
        return False

    def run(self, start, k):
        g = self.g
        first = g.partner(start)
        path = [start, first]
        visited = {start, first}
        stack = [iter(g.successors(first))]
        while stack:
            advanced = False
            for w in stack[-1]:
                if w == start:
                    return tuple(path)
                if w in visited or self.rank[w] < k:
                    continue
                self._count()
                w2 = g.partner(w)
                path.extend((w, w2))
                visited.update((w, w2))
                if self.prune and not self._can_return(w2, start, visited, k):
                    del path[-2:]
                    visited.difference_update((w, w2))
                    continue
                stack.append(iter(g.successors(w2)))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if stack:
                    visited.difference_update(path[-2:])
                    del path[-2:]
        return None


def _ranked_pairs(g, prefer):
    pairs = []
    taken = set()
    for u, v in prefer:
        if (u, v) in g.matching and u not in taken:
            pairs.append((u, v))
            taken.update((u, v))
    for u, v in g.pairs():
        if u not in taken:
            pairs.append((u, v))
            taken.update((u, v))
    return pairs


def find_alternating_circuit(g, budget=None, prefer=(), prune=True):
    """Tam arama: ilk alternatif devreyi (belirleyici sırada) ya da None döndür.

    Her eşleşme çifti sırayla başlangıç olur ve arama yalnızca daha sonraki
    çiftlere iner; böylece her devre en küçük çiftinden bir kez denenir.
    `prefer` içindeki eşleşme yayları önce denenir.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    pairs = _ranked_pairs(g, prefer)
    rank = {}
    for k, (u, v) in enumerate(pairs):
        rank[u] = rank[v] = k
    search = _Search(g, rank, budget, prune)
    for k, (u, v) in enumerate(pairs):
        for start in (u, v):
            seq = search.run(start, k)
            if seq is not None:
                logger.debug(
                    "Alternatif devre bulundu: uzunluk %d, %d genişletme",
                    len(seq), search.expansions,
                )
                labels = tuple(i % 2 == 0 for i in range(len(seq)))
                return AltCircuitWitness(Circuit(seq), labels)
    logger.debug("Alternatif devre yok (%d genişletme)", search.expansions)
    return None


@dataclass(frozen=True)
class ReductionMap:
    """İndirgeme çıktısını kaynağa bağlayan köken tabloları"""

    forward: dict  # kaynak öğe -> hedef öğeler
    backward: dict  # hedef öğe -> kaynak öğe

    def source_of(self, target, default=None):
        return self.backward.get(target, default)

    def targets_of(self, source):
        return self.forward.get(source, ())

    def lines(self):
        return [
            f"{source} -> {' '.join(str(t) for t in self.forward[source])}"
            for source in ordered(self.forward)
        ]


def parse_graph(text):
    vertices, arcs, matching = set(), set(), set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "v" and len(parts) == 2:
            vertices.add(parts[1])
        elif kind in ("m", "a", "e") and len(parts) == 3:
            u, v = parts[1], parts[2]
            vertices.update((u, v))
            arcs.add((u, v))
            if kind == "m":
                matching.update(((u, v), (v, u)))
            if kind in ("m", "e"):
                arcs.add((v, u))
        else:
            raise GraphSyntaxError(lineno, f"Tanınmayan bildirim: {line!r}")
    return validate(vertices, arcs, matching)


def format_graph(g):
    lines = [f"v {v}" for v in ordered(g.vertices)]
    lines.extend(f"m {u} {v}" for u, v in g.pairs())
    for u, v in ordered_arcs(g.arcs):
        if (u, v) in g.matching:
            raise GraphError(f"Eşleşmeye paralel yay metin biçiminde yazılamaz: ({u}, {v})")
        if (v, u) in g.arcs:
            if _key(u) < _key(v):
                lines.append(f"e {u} {v}")
        else:
            lines.append(f"a {u} {v}")
    return "\n".join(lines) + "\n"


def _quote(v):
    text = str(v).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{text}"'


def to_dot(g, witness=None, name="G"):
    hot_matching, hot_other = set(), set()
    if witness is not None:
        hot_matching = set(witness.matching_steps())
        hot_other = set(witness.nonmatching_steps())
    highlight = ["color=red", "penwidth=2"]

    lines = [f"digraph {name} {{"]
    lines.extend(f"  {_quote(v)};" for v in ordered(g.vertices))
    for u, v in g.pairs():
        attrs = ["dir=none", "style=bold"]
        if (u, v) in hot_matching or (v, u) in hot_matching:
            attrs += highlight
        lines.append(f"  {_quote(u)} -> {_quote(v)} [{', '.join(attrs)}];")
    for u, v in ordered_arcs(g.arcs):
        undirected = (v, u) in g.arcs and (u, v) not in g.matching and (v, u) not in g.matching
        if undirected:
            if _key(u) > _key(v):
                continue
            attrs = ["dir=none"]
            hot = (u, v) in hot_other or (v, u) in hot_other
        else:
            attrs = []
            hot = (u, v) in hot_other
        if hot:
            attrs += highlight
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(u)} -> {_quote(v)}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
