"""
Search Strategy
Common interface of the gamma(q, d) searches
"""

from core.graph import GraphSpec
from search.outcome import SearchOutcome


class SearchStrategy:
    """Base class for search strategies"""

    name = "base"

    def run(self, spec: GraphSpec) -> SearchOutcome:
        """
        Search for a large path-unique subgraph of spec
        Override in subclasses
        """
        raise NotImplementedError
