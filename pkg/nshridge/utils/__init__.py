"""Utility modules for nshridge."""
