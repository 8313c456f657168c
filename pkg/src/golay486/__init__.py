"""Ternary Golay code machinery and the 486-vertex graphs it carries.

Submodules:

* gf3            exact GF(3) vectors, matrices, row reduction
* codes          the Golay code, derived codes, cosets, coset graphs
* graph          graphs, distance-regularity, isomorphism, graph6
* permaction     permutations, orbitals, Schreier-Sims, orbital scans
* constructions  the full pipeline and its cross-verifications
* cli            the golay486 command-line tool
"""

__version__ = "0.1.0"

__all__ = ["gf3", "codes", "graph", "permaction", "constructions", "cli"]
