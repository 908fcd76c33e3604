"""Integration tests for the command line and the HTTP adapter."""
