# Search package
# Contains exhaustive and annealing searches for path unique subgraphs
