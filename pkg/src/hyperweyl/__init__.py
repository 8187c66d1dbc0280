"""Stable permutations of hypercubes and the level-2 outer automorphism groups of O_4."""

__version__ = "0.1.0"
