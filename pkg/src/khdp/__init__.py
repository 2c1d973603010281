"""Khovanov homology over the Bar-Natan cobordism category, with chain maps
for immersed surface cobordisms carrying double points."""

__version__ = "0.1.0"
