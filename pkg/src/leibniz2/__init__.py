"""Leibniz 2-algebras: cohomology, abelian extensions and Wells obstructions."""
