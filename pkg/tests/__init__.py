"""Tests for fanalyze."""
