"""Shared helpers for the outerprod test suite."""
