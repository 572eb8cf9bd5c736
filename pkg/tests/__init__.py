"""Tests for nshridge."""
