"""Integration tests driving the command-line entry point."""
