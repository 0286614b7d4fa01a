"""Steinberg algebras of graph groupoids and Leavitt path algebras over the Boolean semifield."""
