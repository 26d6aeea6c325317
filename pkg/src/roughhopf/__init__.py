"""Exact computer algebra for combinatorial Hopf algebras of words and forests,
translations and substitutions of rough paths over them, and their coactions."""

__version__ = "0.1.0"
