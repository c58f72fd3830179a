"""Exact Lawrence-Krammer representation toolkit for BMW algebras of type A."""

__version__ = "0.1.0"
