"""Exact-arithmetic pentagon tilings on the Z[zeta16] lattice."""

from .exact import CycInt, RealQuad, ZETA, rq_sign

__all__ = ["CycInt", "RealQuad", "ZETA", "rq_sign"]
