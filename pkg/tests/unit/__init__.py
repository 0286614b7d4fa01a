"""Unit tests for domain logic."""
