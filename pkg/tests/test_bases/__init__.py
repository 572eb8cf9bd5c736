"""Tests for the spectral bases."""
