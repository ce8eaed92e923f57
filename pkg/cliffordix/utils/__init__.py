"""Utility subpackages for cliffordix."""
