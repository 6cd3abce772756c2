"""
de Bruijn Path Uniqueness - Entry Point
Runs a sub-command, or a short demonstration when called without arguments
"""

import logging
import sys

from config.settings import get_settings
from core.graph import GraphSpec, build_full_graph, format_word
from core.serialization import serialize
from constructions.construction1 import construction1, construction1_count
from constructions.construction2 import construction2, color_counts
from puniq.checker import is_path_unique
from bounds.closed_forms import s_from_gamma, upper_bound_best
from search.exhaustive import exhaustive_gamma
from search.anneal import anneal_gamma
from search.outcome import AnnealConfig, verify_outcome
from labeling.model import LabelSet, label_sequence, label_set_from_subgraph
from labeling.capacity import empirical_rate
from cli.commands import run


def print_section(title):
    """Print section header"""
    print("\n" + "=" * 70)
    print(f"  {title}")
    print("=" * 70)


def demo_path_uniqueness():
    """Decide path-uniqueness of a few graphs"""
    print_section("1. Path Uniqueness")

    spec = GraphSpec(2, 2)
    for name, edges in (("full B(2,2)", build_full_graph(spec)),
                        ("construction 1", construction1(spec))):
        verdict = is_path_unique(edges)
        print(f"\n   {name}: {len(edges)} edges, path unique = {verdict.is_path_unique}")
        if verdict.witness:
            first, second = verdict.witness
            print(f"   witness: {format_word(first)} / {format_word(second)}")


def demo_constructions():
    """Show both constructions"""
    print_section("2. Constructions")

    for q in (2, 3, 4, 5):
        spec = GraphSpec(q, 2)
        print(f"   q={q}: construction 1 = {construction1_count(spec)}, "
              f"construction 2 = {len(construction2(q))}")
    print(f"\n   colours at q=5: {color_counts(construction2(5))}")
    print("\n   construction 2 at q=2:")
    for line in serialize(construction2(2)).splitlines():
        print(f"   {line}")


def demo_bounds():
    """Bracket gamma(q, d)"""
    print_section("3. Bounds")

    for q, d in ((2, 2), (2, 3), (3, 2), (4, 2)):
        upper, k = upper_bound_best(q, d)
        print(f"   B({q},{d}): {construction1_count(GraphSpec(q, d))} <= gamma <= {upper} (k={k})")
    print(f"\n   s(4,2) = {s_from_gamma(4, 1, 6)}")


def demo_searches():
    """Exact and heuristic searches"""
    print_section("4. Searches")

    outcome = exhaustive_gamma(GraphSpec(2, 2))
    print(f"   exhaustive B(2,2): {outcome.best_count} (exact={outcome.exact}, "
          f"{outcome.iterations} nodes, verified={verify_outcome(outcome)})")
    config = AnnealConfig.from_settings(iterations=5000, restarts=2)
    outcome = anneal_gamma(GraphSpec(2, 3), config)
    print(f"   anneal B(2,3): {outcome.best_count} (seed {outcome.seed}, "
          f"verified={verify_outcome(outcome)})")


def demo_labeling():
    """Labeling sequences and rates"""
    print_section("5. Labeling")

    labels = LabelSet(4, 2, ((1, 0), (2, 2)))
    x = (3, 1, 0, 3, 2, 2, 2, 3, 1, 0)
    print(f"   x = {format_word(x)} -> {format_word(label_sequence(x, labels).symbols, ' ')}")

    complement = label_set_from_subgraph(construction1(GraphSpec(2, 2)))
    for n, rate in empirical_rate(2, 10, complement):
        print(f"   n={n:2d} rate={rate:.4f}")


def demo():
    """Run all demonstrations"""
    print("\n" + "=" * 70)
    print("  de Bruijn Path Uniqueness - Demonstration")
    print("=" * 70)

    demo_path_uniqueness()
    demo_constructions()
    demo_bounds()
    demo_searches()
    demo_labeling()

    print("\nTo list the commands:")
    print("  python main.py --help")
    print("\nTo run tests:")
    print("  python tests.py")
    print()


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    logging.basicConfig(
        level=getattr(logging, get_settings().log_level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if not argv:
        demo()
        return 0
    return run(argv)


if __name__ == '__main__':
    sys.exit(main())
