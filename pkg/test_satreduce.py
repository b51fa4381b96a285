import math
import os
import unittest
from itertools import product

from hypothesis import given, settings, strategies as st

import oracles
import rbgraph
import samples
import satreduce
from satreduce import CnfInstance, OccurrenceDag

CORPUS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "corpus")

EXAMPLE = CnfInstance([(1, 2), (-1,)])
CONTRADICTION = CnfInstance([(1,), (-1,)])


def corpus_cnf(name):
    with open(os.path.join(CORPUS, name), encoding="utf-8") as f:
        return satreduce.parse_dimacs(f.read())


def dag(arcs, inner, role):
    return OccurrenceDag(frozenset(inner) | {"s", "t"}, frozenset(arcs), role)


def inner(path):
    return frozenset(path) - {"s", "t"}


class TestNormalize(unittest.TestCase):
    def test_case_01_adds_missing_polarity(self):
        """
        Test Case ID: TC_01
        Test Case Name: Eksik Kutup Testi
        Objective: Eksik kutuplu değişken için totoloji yan tümcesi eklendiğini kontrol etme
        """
        result = satreduce.normalize_cnf(EXAMPLE)
        self.assertIsNone(result.shortcut)
        self.assertEqual(result.added, ((2, -2),))
        self.assertEqual(result.instance.clauses, ((1, 2), (-1,), (2, -2)))
        self.assertEqual(result.instance.variables, (1, 2))

    def test_case_02_unchanged_and_shortcuts(self):
        """
        Test Case ID: TC_02
        Test Case Name: Kısa Yol Testi
        Objective: Boş formül, boş yan tümce ve değişmeyen örnekleri kontrol etme
        """
        result = satreduce.normalize_cnf(CONTRADICTION)
        self.assertEqual(result.instance, CONTRADICTION)
        self.assertEqual(result.added, ())
        self.assertEqual(satreduce.normalize_cnf(CnfInstance([(1, 2), ()])).shortcut, "UNSAT")
        self.assertEqual(satreduce.normalize_cnf(CnfInstance([])).shortcut, "SAT")
        # kullanılmayan değişkenler düşer
        self.assertEqual(satreduce.normalize_cnf(CnfInstance([(1,), (-1,)], (1, 2, 3))).instance.variables, (1,))

    def test_case_03_instance_validation(self):
        """
        Test Case ID: TC_03
        Test Case Name: Örnek Doğrulama Testi
        Objective: Tanımsız değişkenin ve 0 literalinin reddedildiğini kontrol etme
        """
        with self.assertRaises(satreduce.ReductionError):
            CnfInstance([(1, 3)], (1, 2))
        with self.assertRaises(satreduce.ReductionError):
            CnfInstance([(1, 0)])


class TestOccurrenceGraphs(unittest.TestCase):
    def test_case_04_clause_graph(self):
        """
        Test Case ID: TC_04
        Test Case Name: Yan Tümce Çizgesi Testi
        Objective: G_cl yaylarını ve yol sayısını kontrol etme
        """
        gcl = satreduce.build_gcl(EXAMPLE)
        self.assertEqual(
            gcl.arcs,
            {("v1_1", "v2_1"), ("v1_2", "v2_1"), ("s", "v1_1"), ("s", "v1_2"), ("v2_1", "t")},
        )
        self.assertEqual(len(oracles.enumerate_st_paths(gcl, "s", "t")), 2)
        single = satreduce.build_gcl(CnfInstance([(1,)]))
        self.assertEqual(oracles.enumerate_st_paths(single, "s", "t"), [("s", "v1_1", "t")])
        self.assertTrue(gcl.is_acyclic())

    def test_case_05_variable_graph(self):
        """
        Test Case ID: TC_05
        Test Case Name: Değişken Çizgesi Testi
        Objective: G_var yay ailelerini ve 2^p yol sayısını kontrol etme
        """
        normalized = satreduce.normalize_cnf(EXAMPLE).instance
        gvar = satreduce.build_gvar(normalized)
        successor = {("v1_2", "v3_1")}
        bridges = {("v1_1", "v1_2"), ("v1_1", "v3_2"), ("v2_1", "v1_2"), ("v2_1", "v3_2")}
        entry = {("t", "v1_1"), ("t", "v2_1")}
        exit_ = {("v3_1", "s"), ("v3_2", "s")}
        self.assertEqual(gvar.arcs, successor | bridges | entry | exit_)
        self.assertEqual(len(oracles.enumerate_st_paths(gvar, "t", "s")), 4)

        gvar = satreduce.build_gvar(CONTRADICTION)
        self.assertEqual(
            oracles.enumerate_st_paths(gvar, "t", "s"), [("t", "v1_1", "s"), ("t", "v2_1", "s")]
        )
        with self.assertRaises(satreduce.MissingPolarity) as ctx:
            satreduce.build_gvar(EXAMPLE)
        self.assertEqual(ctx.exception.variable, 2)

    def test_case_06_clause_paths_are_choices(self):
        """
        Test Case ID: TC_06
        Test Case Name: Seçim Fonksiyonu Yolları Testi
        Objective: 100 rastgele örnekte G_cl yollarının yan tümce başına bir geçiş seçtiğini kontrol etme
        """
        for seed in range(100):
            inst = samples.random_cnf(seed, variables=4, clauses=1 + seed % 5, max_width=4)
            gcl = satreduce.build_gcl(inst)
            paths = oracles.enumerate_st_paths(gcl, "s", "t")
            widths = [len(c) for c in inst.clauses]
            self.assertEqual(len(paths), math.prod(widths))
            self.assertEqual(oracles.count_st_paths(gcl, "s", "t"), len(paths))
            choices = {
                frozenset(satreduce.occurrence_name(i, j) for i, j in enumerate(pick, 1))
                for pick in product(*(range(1, w + 1) for w in widths))
            }
            self.assertEqual({inner(p) for p in paths}, choices)

    def test_case_07_variable_paths_are_assignments(self):
        """
        Test Case ID: TC_07
        Test Case Name: Atama Yolları Testi
        Objective: 100 rastgele örnekte G_var yollarının tam olarak atamaların yanlış literallerini gezdiğini kontrol etme
        """
        for seed in range(100):
            raw = samples.random_cnf(seed, variables=1 + seed % 8, clauses=6, max_width=3)
            inst = satreduce.normalize_cnf(raw).instance
            gvar = satreduce.build_gvar(inst)
            paths = oracles.enumerate_st_paths(gvar, "t", "s")
            p = len(inst.variables)
            self.assertEqual(len(paths), 2**p)
            occurrences = inst.occurrences()
            expected = set()
            for values in product((False, True), repeat=p):
                truth = dict(zip(inst.variables, values))
                expected.add(frozenset(
                    name for name, (_, _, lit) in occurrences.items()
                    if truth[abs(lit)] != (lit > 0)
                ))
            self.assertEqual({inner(path) for path in paths}, expected)


class TestSuperimpose(unittest.TestCase):
    def test_case_08_disjoint_paths(self):
        """
        Test Case ID: TC_08
        Test Case Name: Ayrık Yollar Testi
        Objective: Ayrık yol çiftinin tek bir sekiz köşeli devre verdiğini kontrol etme
        """
        g1 = dag({("s", "u"), ("u", "t")}, {"u", "v"}, "clause")
        g2 = dag({("t", "v"), ("v", "s")}, {"u", "v"}, "variable")
        sg = satreduce.superimpose(g1, g2)
        circuits = oracles.enumerate_alternating_circuits(sg.graph)
        self.assertEqual(
            [c.seq for c in circuits], [("s1", "uu", "ud", "t1", "t2", "vd", "vu", "s2")]
        )
        self.assertTrue(satreduce.mixed_graphs_acyclic(sg))
        self.assertEqual(oracles.count_disjoint_path_pairs(g1, g2), 1)
        self.assertEqual(sg.map.source_of("vd"), "v")

    def test_case_09_shared_vertex(self):
        """
        Test Case ID: TC_09
        Test Case Name: Ortak Köşe Testi
        Objective: Yollar ortak köşe paylaşınca devre olmadığını kontrol etme
        """
        g1 = dag({("s", "u"), ("u", "t")}, {"u"}, "clause")
        g2 = dag({("t", "u"), ("u", "s")}, {"u"}, "variable")
        sg = satreduce.superimpose(g1, g2)
        self.assertIsNone(rbgraph.find_alternating_circuit(sg.graph))
        self.assertEqual(oracles.count_disjoint_path_pairs(g1, g2), 0)

    def test_case_10_arc_classes_disjoint(self):
        """
        Test Case ID: TC_10
        Test Case Name: Yay Sınıfları Ayrıklık Testi
        Objective: M, A'1 ve A'2 kümelerinin ayrık olduğunu kontrol etme
        """
        enc = satreduce.encode(EXAMPLE)
        sg = enc.superimposed
        self.assertFalse(sg.graph.matching & sg.arcs1)
        self.assertFalse(sg.graph.matching & sg.arcs2)
        self.assertFalse(sg.arcs1 & sg.arcs2)
        self.assertEqual(sg.graph.arcs, sg.arcs1 | sg.arcs2)
        self.assertTrue(satreduce.mixed_graphs_acyclic(sg))

    def test_case_11_hypothesis_violation(self):
        """
        Test Case ID: TC_11
        Test Case Name: Varsayım İhlali Testi
        Objective: Bozulan her varsayımın listelendiğini kontrol etme
        """
        g1 = dag({("u", "s"), ("t", "u")}, {"u"}, "clause")
        g2 = dag({("t", "u")}, {"u", "w"}, "variable")
        with self.assertRaises(satreduce.HypothesisViolation) as ctx:
            satreduce.superimpose(g1, g2)
        self.assertEqual(len(ctx.exception.problems), 3)
        cyclic = dag({("s", "u"), ("u", "w"), ("w", "u")}, {"u", "w"}, "clause")
        with self.assertRaises(satreduce.HypothesisViolation):
            satreduce.superimpose(cyclic, dag(set(), {"u", "w"}, "variable"))
        with self.assertRaises(satreduce.HypothesisViolation):
            oracles.count_disjoint_path_pairs(g1, g2)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.integers(1, 8), st.floats(0.2, 0.6))
    def test_case_12_circuits_match_path_pairs(self, seed, size, density):
        """
        Test Case ID: TC_12
        Test Case Name: Devre-Yol Çifti Eşlemesi Testi
        Objective: Devre sayısının ayrık yol çifti sayısına eşit olduğunu ve her devrenin iki köprüyü birer kez geçtiğini kontrol etme
        """
        g1, g2 = samples.random_dag_pair(seed, size=size, density=density)
        sg = satreduce.superimpose(g1, g2)
        self.assertTrue(satreduce.mixed_graphs_acyclic(sg))
        # sekiz iç köşe 20 köşeli bir çizge verir
        circuits = oracles.enumerate_alternating_circuits(sg.graph, limit=20)
        self.assertEqual(len(circuits), oracles.count_disjoint_path_pairs(g1, g2))
        for c in circuits:
            steps = c.circuit.steps()
            self.assertEqual(steps.count(("t1", "t2")), 1)
            self.assertEqual(steps.count(("s2", "s1")), 1)
        self.assertEqual(
            rbgraph.find_alternating_circuit(sg.graph) is None, not circuits
        )
        # tek yarı devre kuramaz
        half = rbgraph.build(sg.graph.vertices, sg.graph.matching, sg.arcs1)
        self.assertIsNone(rbgraph.find_alternating_circuit(half))


class TestEncodeSolve(unittest.TestCase):
    def test_case_13_encode(self):
        """
        Test Case ID: TC_13
        Test Case Name: Kodlama Testi
        Objective: Kodlanmış çizgenin köşe sayısını ve köşe adlarını kontrol etme
        """
        enc = satreduce.encode(EXAMPLE)
        g = enc.superimposed.graph
        self.assertEqual(len(g.vertices), 14)
        self.assertIn("v3_2u", g.vertices)
        self.assertEqual(g.partner("v1_1u"), "v1_1d")
        self.assertIsNone(rbgraph.find_alternating_circuit(satreduce.encode(CONTRADICTION).superimposed.graph))
        self.assertIsNone(satreduce.encode(CnfInstance([])).superimposed)
        self.assertEqual(
            oracles.count_choice_models(enc.normalized.instance),
            oracles.count_disjoint_path_pairs(enc.gcl, enc.gvar),
        )
        self.assertEqual(len(oracles.enumerate_alternating_circuits(g)), 1)

    def test_case_14_decode(self):
        """
        Test Case ID: TC_14
        Test Case Name: Tanık Çözme Testi
        Objective: Tanıktan çözülen atamanın yan tümceleri sağladığını kontrol etme
        """
        enc = satreduce.encode(EXAMPLE)
        w = rbgraph.find_alternating_circuit(enc.superimposed.graph)
        assignment = satreduce.decode_circuit(enc, w)
        self.assertEqual(str(assignment), "x1=false x2=true")
        self.assertTrue(assignment.satisfies(EXAMPLE))
        self.assertEqual(satreduce.decode_circuit(enc, w.rotated(3)), assignment)
        with self.assertRaises(satreduce.MalformedWitness):
            satreduce.decode_circuit(enc, None)
        with self.assertRaises(satreduce.MalformedWitness):
            satreduce.decode_circuit(enc, rbgraph.find_alternating_circuit(rbgraph.parse_graph("m u v\nm w x\na v w\na x u\n")))
        with self.assertRaises(satreduce.MalformedWitness):
            satreduce.decode_circuit(satreduce.encode(CnfInstance([])), w)

    def test_case_15_fixed_cases(self):
        """
        Test Case ID: TC_15
        Test Case Name: Sabit Örnekler Testi
        Objective: Çelişki, totoloji, boş formül ve boş yan tümce kararlarını kontrol etme
        """
        cases = [
            (EXAMPLE, True),
            (CONTRADICTION, False),
            (CnfInstance([(1, -1)]), True),
            (CnfInstance([]), True),
            (CnfInstance([(1, 2), ()]), False),
            (corpus_cnf("all_pairs.cnf"), False),
            (corpus_cnf("three.cnf"), True),
        ]
        for inst, sat in cases:
            result = satreduce.solve(inst)
            self.assertEqual(result.satisfiable, sat, msg=str(inst))
            if sat:
                self.assertTrue(result.assignment.satisfies(inst))
            else:
                self.assertEqual(str(result), "UNSAT")
        self.assertEqual(str(satreduce.solve(EXAMPLE)), "SAT x1=false x2=true")
        self.assertEqual(str(satreduce.solve(CnfInstance([]))), "SAT")

    def test_case_16_random_agrees_with_brute_force(self):
        """
        Test Case ID: TC_16
        Test Case Name: Kaba Kuvvet Karşılaştırma Testi
        Objective: 200 rastgele CNF örneğinde çözücünün kaba kuvvetle uyuştuğunu kontrol etme
        """
        for seed in range(200):
            inst = samples.random_cnf(
                seed, variables=1 + seed % 6, clauses=1 + seed % 10, max_width=4
            )
            result = satreduce.solve(inst)
            expected = oracles.brute_force_sat(inst)
            self.assertEqual(result.satisfiable, expected is not None, msg=f"seed={seed}")
            if result.satisfiable:
                self.assertTrue(result.assignment.satisfies(inst))
                steps = result.witness.circuit.steps()
                self.assertEqual(steps.count(("s2", "s1")), 1)


class TestDimacs(unittest.TestCase):
    def test_case_17_parse(self):
        """
        Test Case ID: TC_17
        Test Case Name: DIMACS Okuma Testi
        Objective: Yorumların, satır aşan yan tümcelerin ve bitiş işaretinin okunduğunu kontrol etme
        """
        inst = corpus_cnf("three.cnf")
        self.assertEqual(inst.clauses, ((1, -2, 3), (-1, 2), (2, -3), (-1, -3)))
        self.assertEqual(inst.variables, (1, 2, 3))
        self.assertEqual(corpus_cnf("empty.cnf"), CnfInstance([]))
        self.assertEqual(corpus_cnf("empty_clause.cnf").clauses, ((1, 2), ()))
        inst = satreduce.parse_dimacs("c x\np cnf 2 1\n1 -2 0\n%\n0\n")
        self.assertEqual(inst.clauses, ((1, -2),))
        self.assertEqual(satreduce.parse_dimacs("p cnf 2 1\n1 2\n").clauses, ((1, 2),))

    def test_case_18_errors(self):
        """
        Test Case ID: TC_18
        Test Case Name: DIMACS Hata Testi
        Objective: Hatalı girdilerin satır numarasıyla reddedildiğini kontrol etme
        """
        cases = [
            ("p cnf 1 1\n1 2 0\n", 2),
            ("1 2 0\n", 1),
            ("p cnf 2 1\n1 x 0\n", 2),
            ("p cnf two 1\n", 1),
            ("p cnf 1 1\np cnf 1 1\n", 2),
            ("c sadece yorum\n", 0),
        ]
        for text, line in cases:
            with self.assertRaises(satreduce.DimacsError, msg=text) as ctx:
                satreduce.parse_dimacs(text)
            self.assertEqual(ctx.exception.line, line, msg=text)

    def test_case_19_format(self):
        """
        Test Case ID: TC_19
        Test Case Name: DIMACS Yazma Testi
        Objective: Yazılan DIMACS metninin aynı örneği verdiğini kontrol etme
        """
        inst = corpus_cnf("three.cnf")
        text = satreduce.format_dimacs(inst)
        self.assertEqual(text.splitlines()[0], "p cnf 3 4")
        self.assertEqual(satreduce.parse_dimacs(text), inst)
        self.assertEqual(satreduce.format_dimacs(CnfInstance([])), "p cnf 0 0\n")


if __name__ == "__main__":
    unittest.main()
