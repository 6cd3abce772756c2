# Core package
# Contains de Bruijn graph structure, matrices and serialization
