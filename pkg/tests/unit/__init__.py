"""Unit tests for the symbolic engine and the runner."""
