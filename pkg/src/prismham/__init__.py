"""Exact small-graph toolkit: toughness, k-chordality, edge-dominating cycles,
parity triangles on odd cycles and Hamiltonian cycles of prisms G x K2."""

__version__ = "0.1.0"
