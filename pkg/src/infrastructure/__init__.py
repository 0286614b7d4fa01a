"""Infrastructure layer - External dependencies and framework implementations."""
