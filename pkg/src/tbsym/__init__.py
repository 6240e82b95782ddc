"""Thom-Boardman symbols of the polynomial multiplication map, computed exactly."""

__version__ = "0.1.0"
