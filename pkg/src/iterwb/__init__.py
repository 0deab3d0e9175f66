"""Workbench for bounded recursion and revision-bounded iteration over binary words."""

__version__ = "0.1.0"
