"""Spectral bases; each module registers its basis on import."""
