"""Exact verification workbench for braidings, reflection equation algebras and braided Lie brackets."""

__version__ = '0.1.0'
