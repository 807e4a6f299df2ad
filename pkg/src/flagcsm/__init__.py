"""Equivariant CSM classes of Schubert cells in G/B and G/P, in exact arithmetic."""

__version__ = "0.1.0"
