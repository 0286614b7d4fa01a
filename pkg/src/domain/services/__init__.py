"""Domain services - the algorithms of the toolkit."""
