"""Exact verification toolkit for phase-model / finite 2-Toda identities.

Everything is computed over the rationals with Laurent polynomials, so every
identity in the package is asserted with *equality*, never with a tolerance.
"""

__version__ = "0.1.0"
