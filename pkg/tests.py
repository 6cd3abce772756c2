"""
Comprehensive Unit Tests for de Bruijn Path Uniqueness
Tests graphs, path-uniqueness, constructions, bounds, searches, labeling and the CLI
"""

import dataclasses
import io
import itertools
import math
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from unittest import mock

import numpy as np

from config.settings import Settings
from core.exceptions import (
    BoundsInconsistentError, GuardExceededError, IndexOutOfRangeError, MalformedInputError,
    RangeViolationError, SpecRejectedError, SymbolOutOfRangeError, UnsupportedParameterError,
)
from core.graph import (
    EdgeSet, GraphSpec, build_full_graph, decode_word, edge_endpoints, encode_word,
    walk_to_word, word_edges, word_to_walk,
)
from core.matrix import CountMatrix, adjacency_matrix
from core.serialization import EdgeFormat, deserialize, from_edge_list, serialize, to_dot
from constructions.construction1 import construction1, construction1_count
from constructions.construction2 import (
    BlockAnnotation, EdgeColor, Part, block_annotation, construction2, construction2_count, edge_color,
)
from constructions.compare import best_construction_count, compare_lower_bounds
from puniq.checker import PathUniquenessChecker, is_path_unique
from puniq.kernels import allocate_workspace
from puniq.walks import count_walks, is_path_unique_by_powers, max_power_bound
from bounds.closed_forms import (
    corollary2_limits, corollary3_expressions, eta_closed_form, gamma_q1, relative_bounds,
    s_from_gamma, s_single_symbol, upper_bound_best, upper_bound_theorem5, upper_bound_theorem5_exact,
)
from bounds.eta import (
    autocorrelation, count_words_containing, eta_exact, eta_oracle, eta_oracle_counts, eta_oracle_max,
)
from bounds.report import bounds_report
from search.algorithms import get_search
from search.anneal import AnnealSearch, anneal_gamma
from search.budget import BudgetState, NodeBudget
from search.exhaustive import ExhaustiveSearch, branching_order, exhaustive_gamma
from search.kernels import anneal_chain, repair_ordering, triangle_mask
from search.outcome import AnnealConfig, SearchMethod, verify_outcome
from search.symmetry import edge_images, orbit_minimal
from labeling.model import (
    LabelSet, label_sequence, label_set_from_subgraph, parse_label_lines, subgraph_from_label_set,
)
from labeling.capacity import count_distinct_labelings, empirical_rate
from cli.commands import run
from cli.table import TABLE_SPECS, table_rows

LONG_TESTS = os.getenv("DEBRUIJN_LONG_TESTS") == "1"

# Seed fixture for annealing runs
ANNEAL_SEED = 20240601

# Reference table columns, rows in TABLE_SPECS order
TABLE_LB_THM3 = [5, 11, 23, 47, 95, 191, 383, 767,
                 14, 49, 156, 479, 1450,
                 30, 145, 619, 2532,
                 55, 340]
TABLE_LB_THM4 = {2: 5, 3: 15, 4: 34, 5: 64}
TABLE_UB_THM5 = [5, 12, 26, 54, 112, 228, 462, 934,
                 17, 61, 197, 617, 1900,
                 41, 192, 832, 3456,
                 79, 469]

# Distinct labeling outputs of the B(2,2) construction 1 complement {000, 100, 101}
OPTIMAL_LABELING_COUNTS = {3: 4, 4: 8, 5: 15, 6: 30, 7: 60, 8: 120, 9: 240, 10: 480,
                           11: 960, 12: 1920, 13: 3840, 14: 7680, 15: 15360, 16: 30720}


def figure_one_graph() -> EdgeSet:
    """q=4, d=1: loops at 0 and 2, arcs 0->1, 0->3, 2->1, 2->3"""
    return EdgeSet.from_words(GraphSpec(4, 1), [(0, 0), (0, 1), (0, 3), (2, 1), (2, 2), (2, 3)])


def random_subsets(edges: EdgeSet, count: int, seed: int):
    """Random sub-edge-sets with densities spread over (0, 1)"""
    rng = np.random.default_rng(seed)
    members = np.array(sorted(edges.edges), dtype=np.int64)
    for _ in range(count):
        keep = rng.random(len(members)) < rng.uniform(0.1, 0.9)
        yield EdgeSet(edges.spec, frozenset(int(e) for e in members[keep]))


class WitnessAssertions:
    """Replays a two-walk witness through an edge set"""

    def assertValidWitness(self, edges: EdgeSet, witness):
        spec = edges.spec
        first, second = witness
        self.assertEqual(len(first), len(second))
        self.assertNotEqual(first, second)
        self.assertEqual(first[:spec.d], second[:spec.d])
        self.assertEqual(first[-spec.d:], second[-spec.d:])
        for word in witness:
            for i in range(len(word) - spec.d):
                self.assertIn(spec.edge_index(word[i:i + spec.d + 1]), edges)


class CoreTestCase(unittest.TestCase):
    """Unit tests for words, graphs, matrices and formats"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "=" * 60)
        print("de Bruijn Path Uniqueness - Unit Test Suite")
        print("=" * 60)
        print("Testing: Core, Path Uniqueness, Constructions, Bounds, Search, Labeling, CLI")
        print("=" * 60 + "\n")

    # Test 1: Graph spec validation
    def test_01_graph_spec(self):
        """Test graph spec sizes and rejection"""
        print("\n1. Testing graph spec...")

        spec = GraphSpec(2, 2)
        self.assertEqual(spec.vertex_count, 4)
        self.assertEqual(spec.edge_count, 8)
        self.assertEqual(str(spec), "B(2,2)")

        for q, d in ((1, 2), (2, 0), (2, 62), (3, 40)):
            with self.assertRaises(SpecRejectedError):
                GraphSpec(q, d)
        print("   [PASS] Invalid and oversized specs rejected")

    # Test 2: Word indexing
    def test_02_word_indexing(self):
        """Test word encoding and edge endpoints"""
        print("\n2. Testing word indexing...")

        spec = GraphSpec(2, 2)
        self.assertEqual(encode_word((0, 1, 1), 2), 3)
        self.assertEqual(decode_word(3, 2, 3), (0, 1, 1))
        self.assertEqual(edge_endpoints(spec, 3), (1, 3))
        self.assertEqual(edge_endpoints(spec, 4), (2, 0))
        self.assertEqual(edge_endpoints(GraphSpec(3, 3), GraphSpec(3, 3).edge_index((0, 1, 1, 0))), (4, 12))
        self.assertEqual(edge_endpoints(GraphSpec(4, 1), 4), (1, 0))
        self.assertEqual(spec.successors(3), [2, 3])

        with self.assertRaises(IndexOutOfRangeError):
            edge_endpoints(spec, 8)
        with self.assertRaises(SymbolOutOfRangeError):
            spec.edge_index((0, 2, 1))

        self.assertEqual(word_to_walk(spec, (0, 0, 1, 1)), [0, 1, 3])
        self.assertEqual(walk_to_word(spec, [0, 1, 3]), (0, 0, 1, 1))
        self.assertEqual(word_edges(spec, (0, 0, 1, 1)), [1, 3])
        self.assertEqual(GraphSpec(3, 2).vertex_index((1, 2)), 5)
        with self.assertRaises(SymbolOutOfRangeError):
            spec.vertex_index((0, 1, 1))
        print("   [PASS] Lexicographic indexing and walk/word correspondence")

    # Test 3: Edge sets
    def test_03_edge_sets(self):
        """Test edge set operations"""
        print("\n3. Testing edge sets...")

        spec = GraphSpec(2, 2)
        edges = EdgeSet.from_words(spec, [(0, 0, 0), (1, 1, 1), (0, 1, 1)])
        self.assertEqual(list(edges), [0, 3, 7])
        self.assertEqual(edges.loop_count(), 2)
        self.assertEqual(edges.mask().tolist(), [1, 0, 0, 1, 0, 0, 0, 1])
        self.assertEqual(len(edges.complement()), 5)
        self.assertEqual(EdgeSet.from_mask(spec, edges.mask()), edges)
        self.assertEqual(len(build_full_graph(spec)), 8)
        self.assertEqual(edges.without_edges([0, 5]), EdgeSet.from_words(spec, [(1, 1, 1), (0, 1, 1)]))
        self.assertEqual(edges.with_edges([5]).without_edges([5]), edges)
        self.assertFalse(edges.is_annotated())
        self.assertTrue(construction2(2).is_annotated())
        self.assertFalse(construction2(2).without_edges([]).is_annotated())
        self.assertEqual(edges.get_stats()['loops'], 2)
        print(f"   [PASS] Edge set stats: {edges.get_stats()}")

    # Test 4: Adjacency matrices
    def test_04_adjacency_matrix(self):
        """Test adjacency and saturating products"""
        print("\n4. Testing adjacency matrices...")

        full = adjacency_matrix(build_full_graph(GraphSpec(2, 1)))
        self.assertEqual(full.to_list(), [[1, 1], [1, 1]])
        self.assertTrue(full.is_binary())
        self.assertEqual(adjacency_matrix(EdgeSet.from_words(GraphSpec(2, 1), [(0, 0), (0, 1), (1, 1)])).to_list(),
                         [[1, 1], [0, 1]])
        self.assertEqual(adjacency_matrix(construction2(2)).nonzero_count(), 5)
        for q, d in ((2, 3), (3, 2)):
            full_q = adjacency_matrix(build_full_graph(GraphSpec(q, d)))
            self.assertEqual(full_q.row_sums(), [q] * q ** d)
            self.assertEqual(full_q.column_sums(), [q] * q ** d)

        squared = full @ full
        self.assertEqual(squared.to_list(), [[2, 2], [2, 2]])
        exact = CountMatrix(full.entries, cap=None).power(5)
        self.assertEqual(exact.to_list(), [[16, 16], [16, 16]])
        print("   [PASS] Saturated and exact powers")

    # Test 5: Edge-list format
    def test_05_edge_list_format(self):
        """Test edge-list text and its parse errors"""
        print("\n5. Testing edge-list format...")

        text = serialize(construction2(2), EdgeFormat.EDGELIST)
        self.assertEqual(text, "q=2 d=2\n0 0 0\n0 1 1\n1 0 0\n1 0 1\n1 1 1\n")
        self.assertEqual(from_edge_list(text), construction2(2))

        cases = [
            ("q=2 d=2\n0 0 2\n", 2),
            ("q=2 d=2\n0 0 0\n\n0 0 0\n", 4),
            ("q=2\n0 0 0\n", 1),
            ("q=2 d=2\n0 0\n", 2),
            ("q=2 d=2\n0 x 1\n", 2),
            ("q=2 q=3 d=1\n0 0\n", 1),
            ("# header\nd=2 q=2 d=2\n0 0 0\n", 2),
        ]
        for bad, line in cases:
            with self.assertRaises(MalformedInputError) as ctx:
                from_edge_list(bad)
            self.assertEqual(ctx.exception.line_number, line)
            self.assertIn(f"line {line}", str(ctx.exception))
        print("   [PASS] Malformed input reported with line numbers")

    # Test 6: JSON and DOT
    def test_06_json_and_dot(self):
        """Test structured records and DOT export"""
        print("\n6. Testing JSON and DOT...")

        edges = construction1(GraphSpec(3, 2))
        self.assertEqual(deserialize(serialize(edges, "json"), "json"), edges)

        with self.assertRaises(MalformedInputError):
            deserialize('{"q": 2, "d": 2, "edges": [1, 1]}', "json")
        with self.assertRaises(UnsupportedParameterError):
            deserialize("digraph G {}", "dot")

        dot = to_dot(construction2(3))
        self.assertIn("subgraph cluster_0", dot)
        self.assertIn("rank=same", dot)
        self.assertIn("color=blue", dot)
        self.assertEqual(dot.count("->"), 15)
        print("   [PASS] Record round trip and annotated DOT")

    # Test 7: Settings
    def test_07_settings(self):
        """Test environment overrides"""
        print("\n7. Testing settings...")

        with mock.patch.dict(os.environ, {"DEBRUIJN_ANNEAL_RESTARTS": "3",
                                          "DEBRUIJN_SEARCH_BUDGET": "not-a-number"}):
            settings = Settings.from_env()
        self.assertEqual(settings.anneal_restarts, 3)
        self.assertEqual(settings.search_budget, Settings().search_budget)
        print("   [PASS] Overrides applied, bad values fall back to defaults")


class PathUniquenessTestCase(WitnessAssertions, unittest.TestCase):
    """Unit tests for the path-uniqueness decision"""

    # Test 1: Known verdicts
    def test_01_known_verdicts(self):
        """Test small graphs with known answers"""
        print("\n1. Testing known verdicts...")

        self.assertTrue(is_path_unique(figure_one_graph()))
        self.assertTrue(is_path_unique(EdgeSet(GraphSpec(3, 2))))

        edges = EdgeSet.from_words(GraphSpec(2, 1), [(0, 0), (0, 1), (1, 1)])
        verdict = is_path_unique(edges)
        self.assertFalse(verdict.is_path_unique)
        self.assertEqual(verdict.witness, ((0, 0, 1), (0, 1, 1)))
        print(f"   [PASS] Shortest witness {verdict.witness}")

    # Test 2: Full graphs
    def test_02_full_graphs(self):
        """Test that every full de Bruijn graph fails"""
        print("\n2. Testing full graphs...")

        for q in range(2, 5):
            for d in range(1, 5):
                full = build_full_graph(GraphSpec(q, d))
                verdict = is_path_unique(full)
                self.assertFalse(verdict.is_path_unique)
                self.assertValidWitness(full, verdict.witness)
        print("   [PASS] B(q,d) is never path unique for q, d <= 4")

    # Test 3: Constructions are path unique
    def test_03_constructions(self):
        """Test both constructions"""
        print("\n3. Testing constructions...")

        for q in range(2, 5):
            for d in range(1, 5):
                self.assertTrue(is_path_unique(construction1(GraphSpec(q, d))), f"q={q} d={d}")
        for q in range(2, 9):
            self.assertTrue(is_path_unique(construction2(q)), f"q={q}")
        print("   [PASS] Construction 1 (q,d <= 4) and construction 2 (q <= 8)")

    # Test 4: Hereditary property
    def test_04_hereditary(self):
        """Test that subsets of path-unique graphs stay path unique"""
        print("\n4. Testing hereditary property...")

        for edges in (construction1(GraphSpec(2, 4)), construction1(GraphSpec(3, 3)), construction2(5)):
            for subset in random_subsets(edges, 30, seed=len(edges)):
                self.assertTrue(is_path_unique(subset))
        print("   [PASS] Random subsets stay path unique")

    # Test 5: Cross-validation against matrix powers
    def test_05_cross_validation(self):
        """Test pair-graph search against saturating powers"""
        print("\n5. Testing cross-validation...")

        for q, d in ((2, 2), (2, 3), (3, 2)):
            spec = GraphSpec(q, d)
            agreed = 0
            unique = 0
            for subset in random_subsets(build_full_graph(spec), 200, seed=q * 10 + d):
                verdict = is_path_unique(subset)
                self.assertEqual(verdict.is_path_unique, is_path_unique_by_powers(subset))
                if not verdict.is_path_unique:
                    self.assertValidWitness(subset, verdict.witness)
                unique += verdict.is_path_unique
                agreed += 1
            print(f"   [PASS] {spec}: {agreed} subsets agree ({unique} path unique)")

    # Test 6: Walk counts
    def test_06_walk_counts(self):
        """Test walk counting and the power horizon"""
        print("\n6. Testing walk counts...")

        full = build_full_graph(GraphSpec(2, 2))
        self.assertTrue(np.all(count_walks(full, 3).entries == 2))
        self.assertEqual(count_walks(full, 1), adjacency_matrix(full))
        self.assertEqual(count_walks(construction2(5), 2), count_walks(construction2(5), 3))

        self.assertEqual(max_power_bound(GraphSpec(2, 2)), 16)
        self.assertEqual(max_power_bound(GraphSpec(3, 2)), 81)
        self.assertEqual(max_power_bound(GraphSpec(2, 4)), 256)
        with self.assertRaises(RangeViolationError):
            count_walks(full, 0)
        print("   [PASS] Saturated counts and horizons")

    # Test 7: Reusable checker
    def test_07_checker_stats(self):
        """Test checker reuse and statistics"""
        print("\n7. Testing checker statistics...")

        spec = GraphSpec(2, 3)
        checker = PathUniquenessChecker(spec)
        self.assertTrue(checker.check(construction1(spec).mask()))
        self.assertFalse(checker.check(build_full_graph(spec).mask()))
        self.assertTrue(checker.check(construction1(spec).mask()))
        stats = checker.get_stats()
        self.assertEqual(stats['total_checks'], 3)
        self.assertEqual(stats['failed_checks'], 1)
        print(f"   [PASS] Checker stats: {stats}")


class ConstructionsTestCase(unittest.TestCase):
    """Unit tests for the explicit constructions"""

    # Test 1: Construction 1 examples
    def test_01_construction1_examples(self):
        """Test construction 1 membership"""
        print("\n1. Testing construction 1...")

        spec = GraphSpec(2, 2)
        self.assertEqual(construction1(spec).words(), [(0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1)])

        spec = GraphSpec(3, 3)
        edges = construction1(spec)
        starts_low = {w for w in itertools.product(range(3), repeat=4) if w[0] <= w[1]}
        removed = starts_low - set(edges.words())
        self.assertEqual(removed, {(0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1), (1, 1, 1, 1)})
        self.assertEqual(len(edges), 49)
        self.assertEqual(len(construction1(GraphSpec(4, 2))), 30)
        print("   [PASS] B(2,2) words, B(3,3) removals, B(4,2) size")

    # Test 2: Construction 1 count formula
    def test_02_construction1_count(self):
        """Test the edge-count formula against enumeration"""
        print("\n2. Testing construction 1 count...")

        for q in range(2, 7):
            for d in range(1, 7):
                spec = GraphSpec(q, d)
                self.assertEqual(len(construction1(spec)), construction1_count(spec), str(spec))
        self.assertEqual(construction1_count(GraphSpec(2, 9)), 767)
        self.assertEqual(construction1_count(GraphSpec(5, 3)), 340)
        print("   [PASS] Formula matches enumeration for q, d <= 6")

    # Test 3: Construction 2 examples and count
    def test_03_construction2(self):
        """Test construction 2 members, colours and counts"""
        print("\n3. Testing construction 2...")

        colours = construction2(2).edge_colors
        self.assertEqual(colours, {0: EdgeColor.BLUE, 7: EdgeColor.BLUE, 4: EdgeColor.BLACK,
                                   5: EdgeColor.BLACK, 3: EdgeColor.GREEN})

        five = construction2(5)
        self.assertEqual(len(five), 64)
        self.assertEqual(five.edge_colors[five.spec.edge_index((4, 3, 2))], EdgeColor.PURPLE)
        self.assertEqual(five.edge_colors[five.spec.edge_index((0, 1, 2))], EdgeColor.GREEN)

        for q in range(2, 13):
            polynomial = Fraction(q ** 3, 3) + Fraction(3 * q ** 2, 2) - Fraction(23 * q, 6) + 4
            self.assertEqual(construction2_count(q), polynomial)
            self.assertEqual(len(construction2(q)), construction2_count(q))
        self.assertEqual(construction2_count(10), 449)
        print("   [PASS] Counts match for q <= 12")

    # Test 4: Conditions are exclusive
    def test_04_conditions_exclusive(self):
        """Test that at most one membership condition holds per triple"""
        print("\n4. Testing condition exclusivity...")

        for q in range(2, 7):
            conditions = [
                lambda a, b, c: a == b == c,
                lambda a, b, c: 0 < a == b < c,
                lambda a, b, c: a > b and b <= c,
                lambda a, b, c: 0 == a < b <= c,
                lambda a, b, c: q - 1 == a > b > c > 0,
            ]
            for word in itertools.product(range(q), repeat=3):
                held = sum(bool(condition(*word)) for condition in conditions)
                self.assertLessEqual(held, 1)
                self.assertEqual(edge_color(q, word) is not None, held == 1)
        print("   [PASS] Colours are total and exclusive")

    # Test 5: Blocks
    def test_05_blocks(self):
        """Test block annotations and unsupported dimensions"""
        print("\n5. Testing blocks...")

        self.assertEqual(block_annotation((3, 1)), BlockAnnotation(1, Part.TOP))
        self.assertEqual(block_annotation((1, 3)), BlockAnnotation(1, Part.BOTTOM))
        self.assertEqual(block_annotation((2, 2)), BlockAnnotation(2, Part.BOTTOM))
        self.assertEqual(len(construction2(4).vertex_blocks), 16)
        with self.assertRaises(UnsupportedParameterError):
            construction2(3, d=3)
        print("   [PASS] Blocks and parts")

    # Test 6: Lower bound comparison
    def test_06_compare(self):
        """Test which construction is larger"""
        print("\n6. Testing lower bound comparison...")

        self.assertEqual(compare_lower_bounds(2), 0)
        self.assertEqual(compare_lower_bounds(3), 1)
        self.assertEqual(compare_lower_bounds(5), 1)
        for (q, d), expected in (((2, 2), 5), ((3, 2), 15), ((5, 2), 64), ((2, 3), 11), ((3, 3), 49)):
            self.assertEqual(best_construction_count(GraphSpec(q, d)), expected)
        print("   [PASS] Equal at q=2, construction 2 ahead after")

    # Test 7: Middle symbols of length-3 walks
    def test_07_middle_symbols_repeat(self):
        """Test x3 = x4 on every length-3 walk of construction 2"""
        print("\n7. Testing length-3 walks...")

        for q in range(2, 7):
            members = set(construction2(q).words())
            walks = 0
            for word in itertools.product(range(q), repeat=5):
                if all(word[i:i + 3] in members for i in range(3)):
                    self.assertEqual(word[2], word[3], f"q={q} walk {word}")
                    walks += 1
            self.assertGreater(walks, 0)
        print("   [PASS] x3 = x4 for q <= 6")

    # Test 8: A^2 = A^3
    def test_08_square_equals_cube(self):
        """Test exact A^2 = A^3 and the walk extension property"""
        print("\n8. Testing A^2 = A^3...")

        for q in range(2, 9):
            edges = construction2(q)
            self.assertEqual(count_walks(edges, 2, cap=None), count_walks(edges, 3, cap=None), f"q={q}")

        for q in range(2, 6):
            members = set(construction2(q).words())
            for x1, x2, x4, x5 in itertools.product(range(q), repeat=4):
                short = (x1, x2, x4) in members and (x2, x4, x5) in members
                middles = [x3 for x3 in range(q)
                           if (x1, x2, x3) in members and (x2, x3, x4) in members and (x3, x4, x5) in members]
                self.assertEqual(short, len(middles) == 1)
                self.assertLessEqual(len(middles), 1)
        print("   [PASS] Exact for q <= 8, extension property for q <= 5")


class BoundsTestCase(unittest.TestCase):
    """Unit tests for closed-form bounds"""

    # Test 1: gamma(q, 1)
    def test_01_gamma_q1(self):
        """Test the single-symbol extremal value"""
        print("\n1. Testing gamma(q,1)...")

        self.assertEqual([gamma_q1(q) for q in (1, 2, 3, 4, 5)], [1, 2, 4, 6, 9])
        print("   [PASS] gamma(4,1) = 6")

    # Test 2: eta anchors
    def test_02_eta_anchors(self):
        """Test closed form and oracle anchors"""
        print("\n2. Testing eta anchors...")

        self.assertEqual(eta_closed_form(2, 1, 3), 11)
        self.assertEqual(eta_closed_form(2, 2, 2), 4)
        self.assertEqual(eta_closed_form(2, 1, 1), 1)
        self.assertEqual(eta_oracle(2, 1, 2, (1, 0)), 4)
        self.assertEqual(eta_oracle(2, 1, 2, (1, 1)), 3)
        self.assertEqual(eta_oracle_max(2, 2, 3)[0], eta_closed_form(2, 2, 3))
        print("   [PASS] eta(2,1,3)=11, eta(2,2,2)=4")

    # Test 3: eta grid
    def test_03_eta_grid(self):
        """Test closed form against brute force on the whole grid"""
        print("\n3. Testing eta grid...")

        for q in (2, 3):
            for d in (1, 2, 3):
                for k in range(1, 6):
                    closed = eta_closed_form(q, d, k)
                    self.assertEqual(closed, eta_oracle_max(q, d, k)[0], f"{q},{d},{k}")
                    self.assertEqual(closed, eta_exact(q, d, k))
                    plain = (1,) + (0,) * d
                    self.assertEqual(closed, eta_oracle(q, d, k, plain))
                    if d + k < 2 * (d + 1):
                        self.assertEqual(closed, k * q ** (k - 1))
        print("   [PASS] q in {2,3}, d in {1,2,3}, k in 1..5")

    # Test 4: Pattern counting
    def test_04_pattern_counting(self):
        """Test autocorrelation and automaton counts"""
        print("\n4. Testing pattern counting...")

        self.assertEqual(autocorrelation((1, 0)), (1, 0))
        self.assertEqual(autocorrelation((1, 1)), (1, 1))
        self.assertEqual(autocorrelation((1, 0, 1)), (1, 0, 1))
        counts = eta_oracle_counts(2, 2, 3)
        for index, count in enumerate(counts):
            pattern = GraphSpec(2, 2).edge_word(index)
            self.assertEqual(count_words_containing(2, pattern, 5), int(count))
        with self.assertRaises(GuardExceededError):
            eta_oracle(2, 1, 30, (1, 0), max_words=1000)
        print("   [PASS] Automaton matches enumeration")

    # Test 5: Upper bound examples
    def test_05_upper_bound_examples(self):
        """Test the walk-counting bound and its best k"""
        print("\n5. Testing upper bound examples...")

        self.assertEqual(upper_bound_theorem5_exact(2, 2, 2), Fraction(11, 2))
        self.assertEqual(upper_bound_theorem5(2, 2, 2), 5)
        self.assertEqual(upper_bound_best(2, 2), (5, 2))
        self.assertEqual(upper_bound_best(4, 2), (41, 2))
        self.assertEqual(upper_bound_best(2, 3), (12, 3))
        self.assertEqual(upper_bound_best(2, 9)[0], 934)
        print("   [PASS] best(2,2)=5, best(4,2)=41, best(2,3)=12")

    # Test 6: Table regression
    def test_06_table_regression(self):
        """Test every formula column of the reference table"""
        print("\n6. Testing table regression...")

        self.assertEqual(len(TABLE_SPECS), 19)
        for (q, d), lb3, ub in zip(TABLE_SPECS, TABLE_LB_THM3, TABLE_UB_THM5):
            report = bounds_report(GraphSpec(q, d))
            self.assertEqual(report.lb_construction1, lb3, f"q={q} d={d}")
            self.assertEqual(report.ub_theorem5, ub, f"q={q} d={d}")
            self.assertLessEqual(report.lb_construction1, report.ub_theorem5, f"q={q} d={d}")
            if d == 2:
                self.assertEqual(report.lb_construction2, TABLE_LB_THM4[q])
                self.assertLessEqual(report.lb_construction2, report.ub_theorem5, f"q={q} d={d}")
        print("   [PASS] 19 rows exact, lower bounds below the upper bound")

    # Test 7: Bracket consistency
    def test_07_bracket(self):
        """Test that the upper bound never drops below construction 1"""
        print("\n7. Testing bracket consistency...")

        for q in range(2, 7):
            for d in range(1, 7):
                self.assertGreaterEqual(upper_bound_best(q, d)[0], construction1_count(GraphSpec(q, d)))
        print("   [PASS] q, d <= 6")

    # Test 8: Relative and asymptotic values
    def test_08_relative_and_limits(self):
        """Test relative bounds and limits"""
        print("\n8. Testing relative bounds and limits...")

        for d, expected in ((2, 0.6875), (3, 0.7708), (4, 0.8203)):
            self.assertAlmostEqual(float(relative_bounds(2, d)['ub_thm5']), expected, places=4)

        self.assertEqual(corollary3_expressions(3, 2)[2], Fraction(5, 8))
        self.assertEqual(corollary3_expressions(3, 3)[2], Fraction(3, 4))
        self.assertEqual(corollary3_expressions(3, 9)[2], Fraction(9, 10))
        for d in (2, 3):
            self.assertEqual(corollary3_expressions(2, d)[0], upper_bound_theorem5_exact(2, d, d))
            self.assertEqual(corollary3_expressions(3, d)[1], upper_bound_theorem5_exact(3, d, d + 1))

        self.assertEqual(corollary2_limits(d=2), Fraction(1, 3))
        self.assertEqual(corollary2_limits(d=3), Fraction(11, 24))
        self.assertEqual(corollary2_limits(q=2), Fraction(3, 4))
        with self.assertRaises(RangeViolationError):
            corollary2_limits(q=2, d=2)

        d = 3
        big_q = 10 ** 6
        ratio = Fraction(construction1_count(GraphSpec(big_q, d)), big_q ** (d + 1))
        self.assertLess(abs(ratio - corollary2_limits(d=d)), Fraction(1, 10 ** 5))
        print("   [PASS] Relative series and limits")

    # Test 9: Label counts
    def test_09_s_values(self):
        """Test minimum label counts"""
        print("\n9. Testing s values...")

        self.assertEqual(s_from_gamma(4, 1, 6), 10)
        self.assertEqual(s_from_gamma(2, 2, 5), 3)
        for q in range(2, 7):
            self.assertEqual(s_single_symbol(q), q - 1)
            self.assertEqual(s_from_gamma(q, 0, 1), q - 1)
        with self.assertRaises(RangeViolationError):
            s_from_gamma(2, 2, 9)
        print("   [PASS] s(4,2)=10, s(q,1)=q-1")

    # Test 10: Report rows
    def test_10_report_rows(self):
        """Test report records and CSV cells"""
        print("\n10. Testing report rows...")

        report = bounds_report(GraphSpec(2, 3))
        self.assertEqual(report.csv_row(), ["2", "3", "-", "11", "-", "12"])
        self.assertEqual(report.to_record()['ub_k_used'], 3)
        self.assertEqual(bounds_report(GraphSpec(3, 2), lb_search=15).csv_row(), ["3", "2", "15", "14", "15", "17"])
        with self.assertRaises(BoundsInconsistentError):
            bounds_report(GraphSpec(3, 2), lb_search=18)
        print("   [PASS] Absent cells rendered as '-', search above the upper bound rejected")


class SearchTestCase(unittest.TestCase):
    """Unit tests for exhaustive and annealing searches"""

    # Test 1: Exhaustive search, tiny graphs
    def test_01_exhaustive_small(self):
        """Test exact values on B(q,1) and B(2,2)"""
        print("\n1. Testing exhaustive search (small)...")

        for q, expected in ((2, 2), (3, 4), (4, 6)):
            outcome = exhaustive_gamma(GraphSpec(q, 1))
            self.assertTrue(outcome.exact)
            self.assertEqual(outcome.best_count, expected)
            self.assertEqual(outcome.best_count, gamma_q1(q))
            self.assertTrue(verify_outcome(outcome))

        outcome = exhaustive_gamma(GraphSpec(2, 2))
        self.assertEqual(outcome.best_count, 5)
        self.assertTrue(outcome.exact)
        self.assertEqual(outcome.method, SearchMethod.EXHAUSTIVE)
        print(f"   [PASS] gamma(2,2)=5 in {outcome.iterations} nodes")

    # Test 2: Exhaustive search, larger graphs
    def test_02_exhaustive_larger(self):
        """Test exact values on B(2,3) and B(3,2), with and without symmetry"""
        print("\n2. Testing exhaustive search (larger)...")

        for spec, expected in ((GraphSpec(2, 3), 11), (GraphSpec(3, 2), 15)):
            plain = exhaustive_gamma(spec)
            reduced = exhaustive_gamma(spec, symmetry=True)
            self.assertTrue(plain.exact and reduced.exact, str(spec))
            self.assertEqual(plain.best_count, expected)
            self.assertEqual(reduced.best_count, plain.best_count)
            self.assertLessEqual(reduced.iterations, plain.iterations)
            self.assertTrue(verify_outcome(plain))
            self.assertTrue(verify_outcome(reduced))
            print(f"   [PASS] gamma{spec.q, spec.d}={expected} "
                  f"({plain.iterations} nodes, {reduced.iterations} with symmetry)")

    @unittest.skipUnless(LONG_TESTS, "set DEBRUIJN_LONG_TESTS=1")
    def test_03_exhaustive_long(self):
        """Test gamma(2,4) = 24"""
        print("\n3. Testing exhaustive search (long)...")

        outcome = exhaustive_gamma(GraphSpec(2, 4), symmetry=True)
        self.assertTrue(outcome.exact)
        self.assertEqual(outcome.best_count, 24)
        print("   [PASS] gamma(2,4)=24")

    # Test 4: Budget
    def test_04_budget(self):
        """Test budget exhaustion"""
        print("\n4. Testing node budget...")

        budget = NodeBudget(2)
        self.assertTrue(budget.consume())
        self.assertTrue(budget.consume())
        self.assertFalse(budget.consume())
        self.assertEqual(budget.state, BudgetState.EXHAUSTED)
        budget.reset()
        self.assertEqual(budget.get_state()['remaining'], 2)

        outcome = exhaustive_gamma(GraphSpec(2, 3), budget=10)
        self.assertFalse(outcome.exact)
        self.assertTrue(outcome.budget_exhausted)
        self.assertTrue(verify_outcome(outcome))
        self.assertGreaterEqual(outcome.best_count, construction1_count(GraphSpec(2, 3)))

        seeded = exhaustive_gamma(GraphSpec(4, 2), budget=1)
        self.assertTrue(seeded.budget_exhausted)
        self.assertEqual(seeded.best_count, best_construction_count(GraphSpec(4, 2)))
        self.assertEqual(seeded.best_count, 34)
        self.assertTrue(verify_outcome(seeded))
        print("   [PASS] Exhausted budget keeps best so far, starting from the best construction")

    # Test 5: Outcome verification
    def test_05_verify_outcome(self):
        """Test verification rejects tampered witnesses"""
        print("\n5. Testing outcome verification...")

        outcome = exhaustive_gamma(GraphSpec(2, 2))
        self.assertTrue(verify_outcome(outcome))
        extra = next(e for e in range(8) if e not in outcome.witness)
        tampered = dataclasses.replace(outcome, witness=outcome.witness.with_edges([extra]))
        self.assertFalse(verify_outcome(tampered))
        print("   [PASS] Extra edge detected")

    # Test 6: Branching order and symmetries
    def test_06_order_and_symmetry(self):
        """Test branching order and orbit minima"""
        print("\n6. Testing branching order and symmetry...")

        spec = GraphSpec(2, 2)
        self.assertEqual(branching_order(spec), [1, 2, 3, 4, 5, 6, 0, 7])
        images = edge_images(spec)
        self.assertEqual(images.shape, (4, 8))
        self.assertEqual(sorted(images[:, 1].tolist()), [1, 3, 4, 6])

        rank = np.empty(8, dtype=np.int64)
        rank[branching_order(spec)] = np.arange(8)
        minimal = orbit_minimal(spec, rank)
        self.assertTrue(minimal[1])
        self.assertFalse(minimal[6])
        print("   [PASS] Orbits respected")

    # Test 7: Upper triangles
    def test_07_upper_triangles(self):
        """Test triangle candidates from vertex orderings"""
        print("\n7. Testing upper triangles...")

        spec = GraphSpec(2, 2)
        mask = np.zeros(8, dtype=np.uint8)
        identity = np.arange(4, dtype=np.int64)
        self.assertEqual(triangle_mask(identity, 2, 4, mask), 5)
        edges = EdgeSet.from_mask(spec, mask)
        self.assertEqual(edges.words(), [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 1, 1)])
        self.assertFalse(is_path_unique(edges))

        # order 01, 00, 11, 10 puts vertex v at position[v]
        position = np.array([1, 0, 3, 2], dtype=np.int64)
        self.assertEqual(triangle_mask(position, 2, 4, mask), 5)
        edges = EdgeSet.from_mask(spec, mask)
        self.assertEqual(edges.words(), [(0, 0, 0), (0, 1, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1)])
        self.assertTrue(is_path_unique(edges))
        print("   [PASS] Lexicographic triangle invalid, reordered triangle optimal")

    # Test 8: Annealing reaches reference values
    def test_08_anneal_reference_values(self):
        """Test annealing on the small table rows"""
        print("\n8. Testing annealing...")

        config = AnnealConfig.from_settings(seed=ANNEAL_SEED)
        for (q, d), expected in (((2, 2), 5), ((2, 3), 11), ((3, 2), 15), ((4, 2), 34)):
            outcome = anneal_gamma(GraphSpec(q, d), config)
            self.assertTrue(verify_outcome(outcome))
            self.assertFalse(outcome.exact)
            self.assertEqual(outcome.rng_algorithm, "PCG64")
            self.assertGreaterEqual(outcome.best_count, expected, f"q={q} d={d}")
            self.assertLessEqual(outcome.best_count, upper_bound_best(q, d)[0])
            print(f"   [PASS] B({q},{d}): {outcome.best_count}")

    # Test 9: Determinism
    def test_09_anneal_determinism(self):
        """Test identical outcomes for identical seeds and any worker count"""
        print("\n9. Testing annealing determinism...")

        spec = GraphSpec(2, 3)
        config = AnnealConfig(seed=7, iterations=4000, initial_temperature=2.0,
                              cooling_rate=0.999, restarts=4, workers=1)
        first = anneal_gamma(spec, config)
        second = anneal_gamma(spec, config)
        self.assertEqual(first, second)

        threaded = anneal_gamma(spec, dataclasses.replace(config, workers=3))
        self.assertEqual(threaded.best_count, first.best_count)
        self.assertEqual(threaded.witness, first.witness)
        self.assertEqual(threaded.statistics, first.statistics)
        print(f"   [PASS] Identical witness {sorted(first.witness.edges)}")

    # Test 10: Annealing against construction 1
    def test_10_anneal_beats_construction(self):
        """Test annealing reaches construction 1 on every graph with q, d <= 4"""
        print("\n10. Testing annealing against construction 1...")

        config = AnnealConfig.from_settings(seed=ANNEAL_SEED, workers=4)
        for q in range(2, 5):
            for d in range(2, 5):
                spec = GraphSpec(q, d)
                outcome = anneal_gamma(spec, config)
                self.assertTrue(verify_outcome(outcome))
                self.assertGreaterEqual(outcome.best_count, construction1_count(spec), str(spec))
                self.assertLessEqual(outcome.best_count, upper_bound_best(q, d)[0])
                print(f"   [PASS] {spec}: {outcome.best_count} >= {construction1_count(spec)}")

    # Test 11: Strategy factory
    def test_11_factory(self):
        """Test search factory"""
        print("\n11. Testing search factory...")

        self.assertIsInstance(get_search("exhaustive"), ExhaustiveSearch)
        self.assertIsInstance(get_search("anneal"), AnnealSearch)
        self.assertIsInstance(get_search("search-anneal"), AnnealSearch)
        with self.assertRaises(UnsupportedParameterError):
            get_search("genetic")
        with self.assertRaises(RangeViolationError):
            AnnealConfig(seed=1, iterations=10, initial_temperature=1.0, cooling_rate=1.0, restarts=1)
        print("   [PASS] Factory and config validation")

    # Test 12: Chains never accept an invalid triangle
    def test_12_chain_acceptance(self):
        """Test that chains move only between path-unique triangles"""
        print("\n12. Testing chain acceptance and ordering repair...")

        def triangle(spec, order):
            mask = np.zeros(spec.edge_count, dtype=np.uint8)
            triangle_mask(np.argsort(order), spec.q, spec.vertex_count, mask)
            return EdgeSet.from_mask(spec, mask)

        rng = np.random.Generator(np.random.PCG64(ANNEAL_SEED))

        # 00 -> 01 -> 11 with loops at both ends: the identity triangle has two
        # walks of length 3 from 00 to 11
        spec = GraphSpec(4, 2)
        n = spec.vertex_count
        order = np.arange(n, dtype=np.int64)
        self.assertFalse(is_path_unique(triangle(spec, order)))
        swaps = rng.integers(0, n, size=(50, 2), dtype=np.int64)
        best_mask = np.zeros(spec.edge_count, dtype=np.uint8)
        best, accepted, valid_states = anneal_chain(
            spec.q, n, order, swaps, np.ones(50), 2.0, 0.9995, *allocate_workspace(n), best_mask)
        self.assertEqual(accepted, valid_states)
        if accepted:
            self.assertTrue(is_path_unique(triangle(spec, order)))
            self.assertTrue(is_path_unique(EdgeSet.from_mask(spec, best_mask)))
        else:
            self.assertEqual(best, -1)
            np.testing.assert_array_equal(order, np.arange(n))

        # repair turns an invalid ordering of B(2,2) into a valid one
        spec = GraphSpec(2, 2)
        workspace = allocate_workspace(4)
        self.assertEqual(repair_ordering(2, 4, np.array([1, 0, 3, 2], dtype=np.int64),
                                         np.zeros((1, 2), dtype=np.int64), *workspace), 0)
        self.assertEqual(repair_ordering(2, 4, np.arange(4, dtype=np.int64),
                                         np.zeros((20, 2), dtype=np.int64), *workspace), -1)

        order = np.arange(4, dtype=np.int64)
        swaps = rng.integers(0, 4, size=(500, 2), dtype=np.int64)
        used = repair_ordering(2, 4, order, swaps, *workspace)
        self.assertGreater(used, 0)
        start = triangle(spec, order)
        self.assertTrue(is_path_unique(start))

        best_mask = np.zeros(spec.edge_count, dtype=np.uint8)
        best, accepted, valid_states = anneal_chain(
            2, 4, order, swaps[used:], np.ones(500 - used), 2.0, 0.9995, *workspace, best_mask)
        self.assertEqual(accepted, valid_states)
        self.assertGreaterEqual(best, len(start))
        self.assertLessEqual(best, 5)
        self.assertTrue(is_path_unique(triangle(spec, order)))
        print(f"   [PASS] Repaired in {used} swaps, {accepted} accepted swaps all path unique")


class LabelingTestCase(unittest.TestCase):
    """Unit tests for the labeling channel"""

    # Test 1: Labeling sequences
    def test_01_label_sequence(self):
        """Test labeling sequences"""
        print("\n1. Testing labeling sequences...")

        labels = LabelSet(4, 2, ((2, 2), (1, 0)))
        x = (3, 1, 0, 3, 2, 2, 2, 3, 1, 0)
        self.assertEqual(label_sequence(x, labels).symbols, (0, 1, 0, 0, 2, 2, 0, 0, 1, 0))
        self.assertEqual(label_sequence(x, LabelSet(4, 2)).symbols, (0,) * 10)
        self.assertEqual(label_sequence((1, 1, 1), LabelSet(2, 2, ((1, 1),))).symbols, (1, 1, 0))
        with self.assertRaises(SymbolOutOfRangeError):
            label_sequence((0, 4), labels)
        print("   [PASS] Worked example reproduced")

    # Test 2: Subgraph complements
    def test_02_subgraph_complements(self):
        """Test label sets as subgraph complements"""
        print("\n2. Testing subgraph complements...")

        self.assertEqual(len(label_set_from_subgraph(build_full_graph(GraphSpec(3, 2)))), 0)
        figure = figure_one_graph()
        labels = label_set_from_subgraph(figure)
        self.assertEqual(len(labels), 10)
        self.assertEqual(len(labels), s_from_gamma(4, 1, len(figure)))

        edges = construction1(GraphSpec(2, 2))
        labels = label_set_from_subgraph(edges)
        self.assertEqual(labels.labels, ((0, 0, 0), (1, 0, 0), (1, 0, 1)))
        self.assertEqual(subgraph_from_label_set(labels), edges)
        print("   [PASS] Complement is an involution")

    # Test 3: Distinct labelings
    def test_03_distinct_labelings(self):
        """Test distinct-output counts"""
        print("\n3. Testing distinct labelings...")

        self.assertEqual(count_distinct_labelings(2, 3, LabelSet(2, 2, ((1, 1),))), 4)
        self.assertEqual(count_distinct_labelings(3, 4, LabelSet(3, 2)), 1)
        every = LabelSet(2, 2, tuple(itertools.product(range(2), repeat=2)))
        self.assertEqual(count_distinct_labelings(2, 3, every), 8)
        with self.assertRaises(GuardExceededError):
            count_distinct_labelings(2, 30, every, max_states=2 ** 20)
        print("   [PASS] 4, 1 and 8 outputs")

    # Test 4: Rate series
    def test_04_rate_series(self):
        """Test the distinct-output counts and rates of the optimal B(2,2) label set"""
        print("\n4. Testing rate series...")

        self.assertTrue(all(rate == 0 for _, rate in empirical_rate(2, 10, LabelSet(2, 3))))

        optimal = label_set_from_subgraph(construction1(GraphSpec(2, 2)))
        self.assertEqual(optimal.labels, ((0, 0, 0), (1, 0, 0), (1, 0, 1)))
        counts = {n: count_distinct_labelings(2, n, optimal) for n in range(3, 17)}
        self.assertEqual(counts, OPTIMAL_LABELING_COUNTS)
        self.assertEqual([counts[n] for n in sorted(counts)], sorted(counts.values()))

        for n in range(3, 11):
            outputs = {label_sequence(x, optimal).symbols for x in itertools.product(range(2), repeat=n)}
            self.assertEqual(len(outputs), counts[n], f"n={n}")

        series = dict(empirical_rate(2, 16, optimal))
        for n, count in counts.items():
            self.assertAlmostEqual(series[n], math.log2(count) / n)
        self.assertLessEqual(series[16], 1.0)

        single = dict(empirical_rate(2, 12, LabelSet(2, 3, ((0, 0, 0),))))
        for n in range(8, 13):
            self.assertLess(single[n], series[n])
        print(f"   [PASS] counts {counts[3]} .. {counts[16]}, rate(16) = {series[16]:.4f}")

    # Test 5: Path-unique complements label better
    def test_05_path_unique_complement_rate(self):
        """Test the optimal graph's complement against non-path-unique supergraphs"""
        print("\n5. Testing complement rates...")

        spec = GraphSpec(2, 2)
        optimal = construction1(spec)
        best = count_distinct_labelings(2, 16, label_set_from_subgraph(optimal))
        for extra in sorted(optimal.complement().edges):
            supergraph = optimal.with_edges([extra])
            self.assertFalse(is_path_unique(supergraph))
            count = count_distinct_labelings(2, 16, label_set_from_subgraph(supergraph))
            self.assertGreater(best, count)
        print("   [PASS] Every 6-edge supergraph labels fewer outputs")

    # Test 6: Label files
    def test_06_label_files(self):
        """Test label file parsing"""
        print("\n6. Testing label files...")

        labels = parse_label_lines(["# labels", "1 0", "", "22"], 4)
        self.assertEqual(labels.labels, ((1, 0), (2, 2)))
        for lines, line in ((["1 0", "1 0"], 2), (["1 0", "1 0 1"], 2), (["1 5"], 1), (["a b"], 1)):
            with self.assertRaises(MalformedInputError) as ctx:
                parse_label_lines(lines, 4)
            self.assertEqual(ctx.exception.line_number, line)
        print("   [PASS] Comments skipped, errors located")


class CliTestCase(unittest.TestCase):
    """Unit tests for the command-line front end"""

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = run(list(argv))
        return code, out.getvalue(), err.getvalue()

    def write_temp(self, text):
        handle = tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False)
        handle.write(text)
        handle.close()
        self.addCleanup(os.unlink, handle.name)
        return handle.name

    # Test 1: Table
    def test_01_table(self):
        """Test the table command"""
        print("\n1. Testing table command...")

        code, out, _ = self.run_cli("table", "--rows", "q=2")
        self.assertEqual(code, 0)
        lines = out.split("\n")
        self.assertEqual(lines[0], "q,d,lb_comp,lb_thm3,lb_thm4,ub_thm5")
        self.assertEqual(lines[1], "2,2,-,5,5,5")
        self.assertEqual(lines[2], "2,3,-,11,-,12")
        self.assertEqual([int(line.split(",")[3]) for line in lines[1:9]], TABLE_LB_THM3[:8])
        self.assertEqual([int(line.split(",")[5]) for line in lines[1:9]], TABLE_UB_THM5[:8])
        self.assertNotIn("\r", out)
        self.assertEqual(out, self.run_cli("table", "--rows", "q=2")[1])
        self.assertEqual(len(table_rows()), 19)
        print("   [PASS] Byte-identical table")

    # Test 2: Asymptotics
    def test_02_asymptotics(self):
        """Test the asymptotics command"""
        print("\n2. Testing asymptotics command...")

        code, out, _ = self.run_cli("asymptotics")
        lines = out.strip().split("\n")
        self.assertEqual(code, 0)
        self.assertEqual(lines[0], "d,lb_thm3,lb_thm4,ub_thm5")
        self.assertEqual(lines[1], "2,0.333333,0.333333,0.625000")
        self.assertEqual(lines[2], "3,0.458333,-,0.750000")
        self.assertEqual(len(lines), 9)

        code, out, _ = self.run_cli("asymptotics", "--relative", "--q", "2")
        self.assertIn("2,2,0.625000,0.625000,0.687500", out)
        print("   [PASS] Limit series")

    # Test 3: Check
    def test_03_check(self):
        """Test the check command"""
        print("\n3. Testing check command...")

        path = self.write_temp(serialize(figure_one_graph()))
        code, out, _ = self.run_cli("check", "--input", path)
        self.assertEqual((code, out), (0, "path unique\n"))

        path = self.write_temp("q=2 d=1\n0 0\n0 1\n1 1\n")
        code, out, _ = self.run_cli("check", "--input", path)
        self.assertEqual(out, "not path unique\n"
                              "walk 1: 0 0 1 (edges 0, 1)\n"
                              "walk 2: 0 1 1 (edges 1, 3)\n")

        path = self.write_temp("q=2 d=1\n0 0\n0 3\n")
        code, _, err = self.run_cli("check", "--input", path)
        self.assertEqual(code, 1)
        self.assertIn("line 3", err)
        print("   [PASS] Verdicts and line-numbered errors")

    # Test 4: Graph output and labeling commands
    def test_04_graphs_and_labels(self):
        """Test construction output and labeling commands"""
        print("\n4. Testing graph and labeling commands...")

        code, out, _ = self.run_cli("construct2", "--q", "2")
        self.assertEqual(out, "q=2 d=2\n0 0 0\n0 1 1\n1 0 0\n1 0 1\n1 1 1\n")
        code, out, _ = self.run_cli("gen", "--q", "2", "--d", "1", "--format", "json")
        self.assertIn('"edges"', out)
        code, _, _ = self.run_cli("construct2", "--q", "3", "--d", "3")
        self.assertEqual(code, 1)

        labels = self.write_temp("1 0\n2 2\n")
        code, out, _ = self.run_cli("label", "--q", "4", "--word", "3103222310", "--labels", labels)
        self.assertEqual(out, "0 1 0 0 2 2 0 0 1 0\n")
        binary = self.write_temp("1 0\n")
        code, out, _ = self.run_cli("rate", "--q", "2", "--n", "4", "--labels", binary)
        self.assertEqual(code, 0)
        self.assertEqual(out.split("\n")[0], "n,rate")
        code, _, _ = self.run_cli("rate", "--q", "2", "--n", "30", "--labels", binary)
        self.assertEqual(code, 2)
        print("   [PASS] Outputs and guard exit code")

    # Test 5: Exit codes
    def test_05_exit_codes(self):
        """Test usage errors and budget exhaustion"""
        print("\n5. Testing exit codes...")

        self.assertEqual(self.run_cli("bogus")[0], 1)
        self.assertEqual(self.run_cli("bounds", "--q", "x")[0], 1)
        self.assertEqual(self.run_cli("search-exhaustive", "--q", "2", "--d", "3", "--budget", "5")[0], 2)
        code, out, _ = self.run_cli("search-exhaustive", "--q", "2", "--d", "2")
        self.assertEqual(code, 0)
        self.assertIn('"best_count": 5', out)
        code, out, _ = self.run_cli("eta", "--q", "2", "--d", "1", "--k", "3")
        self.assertEqual(out.strip().split("\n")[1], "2,1,3,max,11,11,11")
        print("   [PASS] Exit codes 0, 1 and 2")


def run_tests():
    """Run all unit tests"""
    loader = unittest.TestLoader()
    test_suite = unittest.TestSuite()
    for case in (CoreTestCase, PathUniquenessTestCase, ConstructionsTestCase, BoundsTestCase,
                 SearchTestCase, LabelingTestCase, CliTestCase):
        test_suite.addTests(loader.loadTestsFromTestCase(case))

    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(test_suite)

    print("\n" + "=" * 60)
    print("TEST SUMMARY")
    print("=" * 60)
    print(f"Tests run: {result.testsRun}")
    print(f"Successes: {result.testsRun - len(result.failures) - len(result.errors)}")
    print(f"Failures: {len(result.failures)}")
    print(f"Errors: {len(result.errors)}")
    print(f"Skipped: {len(result.skipped)}")

    if result.testsRun > 0:
        success_rate = ((result.testsRun - len(result.failures) - len(result.errors)) / result.testsRun * 100)
        print(f"Success rate: {success_rate:.1f}%")

    if result.failures:
        print("\n[FAIL] FAILURES:")
        for test, traceback in result.failures:
            print(f"  - {test}")

    if result.errors:
        print("\n[ERROR] ERRORS:")
        for test, traceback in result.errors:
            print(f"  - {test}")

    if not result.failures and not result.errors:
        print("\nALL TESTS PASSED!")

    print("=" * 60)

    return result.wasSuccessful()


if __name__ == "__main__":
    print("de Bruijn Path Uniqueness - Unit Test Suite")
    print("=" * 60)

    try:
        success = run_tests()
        exit(0 if success else 1)
    except KeyboardInterrupt:
        print("\n\n[WARNING]  Tests interrupted by user")
        exit(1)
