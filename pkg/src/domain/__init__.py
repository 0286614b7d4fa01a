"""Domain layer - Pure business logic with no framework dependencies."""
