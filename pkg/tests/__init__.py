"""Tests for outerprod."""
