import logging
import re
from collections import Counter
from dataclasses import dataclass
from typing import ClassVar

import rbgraph

# Logger ayarları
logger = logging.getLogger(__name__)

ATOM_PATTERN = re.compile(r"[a-z][a-z0-9_]*")


class ProofNetError(ValueError):
    """proofnet hatalarının ortak tabanı"""


class FormulaSyntaxError(ProofNetError):
    def __init__(self, position, message):
        super().__init__(f"Konum {position}: {message}")
        self.position = position


class StructureSyntaxError(ProofNetError):
    def __init__(self, line, message):
        super().__init__(f"Satır {line}: {message}")
        self.line = line


class UnknownAddress(ProofNetError):
    def __init__(self, address):
        super().__init__(f"Adres bulunamadı: {address}")
        self.address = address


class NotAnAtom(ProofNetError):
    def __init__(self, address):
        super().__init__(f"Aksiyom bir atoma bağlanmalı: {address}")
        self.address = address


class AtomNotLinked(ProofNetError):
    def __init__(self, address):
        super().__init__(f"Atom hiçbir aksiyoma bağlı değil: {address}")
        self.address = address


class AtomLinkedTwice(ProofNetError):
    def __init__(self, address):
        super().__init__(f"Atom birden fazla aksiyoma bağlı: {address}")
        self.address = address


class AxiomMismatch(ProofNetError):
    def __init__(self, first, second):
        super().__init__(f"Aksiyom ikili atomları bağlamıyor: {first} - {second}")
        self.first, self.second = first, second


class InvalidStructure(ProofNetError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(str(p) for p in self.problems))


class ParallelArcCollision(ProofNetError):
    def __init__(self, arcs):
        self.arcs = list(arcs)
        shown = ", ".join(f"({u}, {v})" for u, v in self.arcs)
        super().__init__(f"İlişki ağı yayı bir aksiyom yayıyla çakışıyor: {shown}")


# Formüller

@dataclass(frozen=True)
class Atom:
    name: str
    dual: bool = False

    def __str__(self):
        return self.name + ("^" if self.dual else "")


@dataclass(frozen=True)
class _Binary:
    left: object
    right: object
    symbol: ClassVar[str] = "?"

    def __str__(self):
        return f"({self.left} {self.symbol} {self.right})"


class Tensor(_Binary):
    symbol = "*"


class Par(_Binary):
    symbol = "|"


class Before(_Binary):
    symbol = "<"


CONNECTIVES = {cls.symbol: cls for cls in (Tensor, Par, Before)}


def subformulas(f, path=""):
    """(yol, alt formül) çiftleri, önce-kök sırasında"""
    result = [(path, f)]
    if isinstance(f, _Binary):
        result += subformulas(f.left, path + "L")
        result += subformulas(f.right, path + "R")
    return result


def leaves(f, path=""):
    return [(p, g) for p, g in subformulas(f, path) if isinstance(g, Atom)]


def dual(f):
    """Doğrusal olumsuzlama; < kendi kendinin ikilisidir ve sırasını korur"""
    if isinstance(f, Atom):
        return Atom(f.name, not f.dual)
    if isinstance(f, Tensor):
        return Par(dual(f.left), dual(f.right))
    if isinstance(f, Par):
        return Tensor(dual(f.left), dual(f.right))
    return Before(dual(f.left), dual(f.right))


class _FormulaParser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def formula(self):
        c = self._peek()
        if c == "(":
            self.pos += 1
            left = self.formula()
            op = self._peek()
            if op not in CONNECTIVES:
                raise FormulaSyntaxError(self.pos, f"Bağlaç bekleniyordu (*, |, <), bulunan {op!r}")
            self.pos += 1
            right = self.formula()
            if self._peek() != ")":
                raise FormulaSyntaxError(self.pos, "')' bekleniyordu")
            self.pos += 1
            return CONNECTIVES[op](left, right)
        match = ATOM_PATTERN.match(self.text, self.pos)
        if match is None:
            raise FormulaSyntaxError(self.pos, f"Atom ya da '(' bekleniyordu, bulunan {c!r}")
        self.pos = match.end()
        is_dual = self.pos < len(self.text) and self.text[self.pos] == "^"
        if is_dual:
            self.pos += 1
        return Atom(match.group(), is_dual)

    def parse(self):
        f = self.formula()
        if self._peek():
            raise FormulaSyntaxError(self.pos, "Formülden sonra fazla girdi")
        return f


def parse_formula(text):
    return _FormulaParser(text).parse()


def relation_web(f):
    """Formülün atom yaprakları (yolları) üzerindeki ilişki ağı"""
    arcs = set()

    def walk(g, path):
        if isinstance(g, Atom):
            return [path]
        left = walk(g.left, path + "L")
        right = walk(g.right, path + "R")
        if isinstance(g, Tensor):
            arcs.update((a, b) for a in left for b in right)
            arcs.update((b, a) for a in left for b in right)
        elif isinstance(g, Before):
            arcs.update((a, b) for a in left for b in right)
        return left + right

    walk(f, "")
    return frozenset(arcs)


# İspat yapıları

@dataclass(frozen=True, order=True)
class Address:
    root: int
    path: str = ""

    def __str__(self):
        return f"{self.root}:{self.path or '-'}"


def parse_address(text):
    root, sep, path = text.partition(":")
    if not sep or not root.isdigit() or (path != "-" and not re.fullmatch(r"[LR]+", path)):
        raise ProofNetError(f"Geçersiz adres: {text!r}")
    return Address(int(root), "" if path == "-" else path)


@dataclass(frozen=True)
class ProofStructure:
    conclusions: tuple
    axioms: tuple  # sıralı (Address, Address) çiftleri

    def __post_init__(self):
        object.__setattr__(self, "conclusions", tuple(self.conclusions))
        object.__setattr__(
            self, "axioms", tuple(sorted(tuple(sorted(pair)) for pair in self.axioms))
        )

    def atoms(self):
        return {
            Address(i, path): atom
            for i, conc in enumerate(self.conclusions)
            for path, atom in leaves(conc)
        }

    def formula_at(self, address):
        if not 0 <= address.root < len(self.conclusions):
            return None
        f = self.conclusions[address.root]
        for step in address.path:
            if not isinstance(f, _Binary):
                return None
            f = f.left if step == "L" else f.right
        return f


def validate_structure(ps):
    problems = []
    atoms = ps.atoms()
    seen = Counter()
    for first, second in ps.axioms:
        ok = True
        for address in (first, second):
            f = ps.formula_at(address)
            if f is None:
                problems.append(UnknownAddress(address))
                ok = False
            elif not isinstance(f, Atom):
                problems.append(NotAnAtom(address))
                ok = False
            else:
                seen[address] += 1
        if ok:
            a, b = atoms[first], atoms[second]
            if first == second or a.name != b.name or a.dual == b.dual:
                problems.append(AxiomMismatch(first, second))
    for address in sorted(atoms):
        if seen[address] == 0:
            problems.append(AtomNotLinked(address))
        elif seen[address] > 1:
            problems.append(AtomLinkedTwice(address))
    if problems:
        raise InvalidStructure(problems)
    return ps


def identity_structure(f):
    """⊢ f^, f yapısı; aksiyomlar aynı yoldaki atomları bağlar"""
    axioms = [(Address(0, path), Address(1, path)) for path, _ in leaves(f)]
    return ProofStructure((dual(f), f), axioms)


def link_counts(ps):
    counts = Counter(ax=len(ps.axioms))
    for conc in ps.conclusions:
        for _, sub in subformulas(conc):
            if isinstance(sub, _Binary):
                counts[sub.symbol] += 1
    return counts


def to_web_rb(ps):
    """İlişki ağı okuması: köşeler atom geçişleri, eşleşme dışı yaylar ilişki ağları"""
    validate_structure(ps)
    atoms = ps.atoms()
    forward = {address: (str(address),) for address in atoms}
    backward = {str(address): address for address in atoms}
    matching = set()
    for a, b in ps.axioms:
        matching.update(((str(a), str(b)), (str(b), str(a))))
    arcs = set()
    for i, conc in enumerate(ps.conclusions):
        arcs.update(
            (str(Address(i, p)), str(Address(i, q))) for p, q in relation_web(conc)
        )
    collisions = rbgraph.ordered_arcs(arcs & matching)
    if collisions:
        raise ParallelArcCollision(collisions)
    graph = rbgraph.build(backward, matching, arcs)
    return graph, rbgraph.ReductionMap(forward, backward)


def _ends(address):
    return f"{address}.t", f"{address}.b"


def to_rb(ps):
    """Bağ sunumunun RB çizgesi.

    Her formül geçişi F bir eşleşme kenarı {F.t, F.b} verir; aksiyom ve bağlaç
    bağları eşleşme dışı yaylardır. < bağı yalnızca sol öncülün alt ucundan
    sağ öncülün alt ucuna yönlü yay ekler.
    """
    validate_structure(ps)
    matching, arcs = set(), set()
    forward, backward = {}, {}

    def both(u, v):
        arcs.update(((u, v), (v, u)))

    for i, conc in enumerate(ps.conclusions):
        for path, sub in subformulas(conc):
            address = Address(i, path)
            top, bottom = _ends(address)
            matching.update(((top, bottom), (bottom, top)))
            forward[address] = (top, bottom)
            backward[top] = backward[bottom] = address
            if isinstance(sub, _Binary):
                _, left = _ends(Address(i, path + "L"))
                _, right = _ends(Address(i, path + "R"))
                both(left, top)
                both(right, top)
                if isinstance(sub, Tensor):
                    both(left, right)
                elif isinstance(sub, Before):
                    arcs.add((left, right))
    for a, b in ps.axioms:
        both(_ends(a)[0], _ends(b)[0])
    graph = rbgraph.build(backward, matching, arcs)
    logger.debug("RB çizgesi: %d köşe, %d eşleşme dışı yay", len(graph.vertices), len(arcs))
    return graph, rbgraph.ReductionMap(forward, backward)


@dataclass(frozen=True)
class Verdict:
    correct: bool
    witness: object = None  # rbgraph.AltCircuitWitness
    reading: tuple = ()  # devre sırasında atom adresleri

    def __str__(self):
        if self.correct:
            return "CORRECT"
        return "INCORRECT " + " ".join(str(a) for a in self.reading)


def atom_reading(ps, rmap, witness):
    atoms = ps.atoms()
    reading = []
    for v in witness.seq:
        address = rmap.source_of(v)
        if address in atoms and (not reading or reading[-1] != address):
            reading.append(address)
    if len(reading) > 1 and reading[0] == reading[-1]:
        reading.pop()
    return tuple(reading)


def check_correctness(ps, budget=None):
    graph, rmap = to_rb(ps)
    witness = rbgraph.find_alternating_circuit(graph, budget=budget)
    if witness is None:
        return Verdict(True)
    return Verdict(False, witness, atom_reading(ps, rmap, witness))


def parse_structure(text):
    conclusions, axioms = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *rest = line.split(None, 1)
        rest = rest[0] if rest else ""
        if kind == "conc":
            try:
                conclusions.append(parse_formula(rest))
            except FormulaSyntaxError as e:
                raise StructureSyntaxError(lineno, str(e)) from e
        elif kind == "ax":
            parts = rest.split()
            if len(parts) != 2:
                raise StructureSyntaxError(lineno, "Aksiyom iki adres almalı")
            try:
                axioms.append(tuple(parse_address(p) for p in parts))
            except ProofNetError as e:
                raise StructureSyntaxError(lineno, str(e)) from e
        else:
            raise StructureSyntaxError(lineno, f"Tanınmayan bildirim: {line!r}")
    return validate_structure(ProofStructure(conclusions, axioms))


def format_structure(ps):
    lines = [f"conc {conc}" for conc in ps.conclusions]
    lines.extend(f"ax {a} {b}" for a, b in ps.axioms)
    return "\n".join(lines) + "\n"
