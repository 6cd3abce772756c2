# Constructions package
# Contains the explicit path unique subgraph constructions
