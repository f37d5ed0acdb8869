"""Exact Yang-Baxter operators and non-associative identity checks."""
