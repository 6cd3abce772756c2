"""
Search Algorithms
Factory over the available gamma(q, d) searches
"""

from core.exceptions import UnsupportedParameterError
from search.anneal import AnnealSearch
from search.base import SearchStrategy
from search.exhaustive import ExhaustiveSearch


# Algorithm factory
def get_search(name: str, **options) -> SearchStrategy:
    """
    Get a search strategy by name

    Args:
        name: "exhaustive" or "anneal"
        **options: Constructor arguments of the strategy

    Returns:
        Strategy instance

    Raises:
        UnsupportedParameterError: For an unknown name
    """
    strategies = {
        'exhaustive': ExhaustiveSearch,
        'anneal': AnnealSearch,
    }
    strategy_class = strategies.get(name.lower().replace("search-", ""))
    if strategy_class is None:
        raise UnsupportedParameterError(f"unknown search {name!r}, expected one of {sorted(strategies)}")
    return strategy_class(**options)
