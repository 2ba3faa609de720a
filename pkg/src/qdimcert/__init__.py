"""Exact certificates for the quotient dimension of 2-bridge knot surgeries."""

__version__ = "0.1.0"
