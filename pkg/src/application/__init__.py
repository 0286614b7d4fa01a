"""Application layer - Use cases and application services."""
