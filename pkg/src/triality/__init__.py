"""Kirillov-Reshetikhin crystals of type D4^(3) and their rigged configurations."""
from .core import D4, G2, Tensor
from .rc import RC, cocharge, enumerate_hw, make_rc
from .bijection import phi, phi_inv, delta, delta_inv
from .tableaux import Row, Tableau, fill_1, fill_2, row
from .kleber import virtual_kleber
from .virtualization import rc_virtualize

__all__ = [
    "D4", "G2", "Tensor", "RC", "cocharge", "enumerate_hw", "make_rc", "phi", "phi_inv",
    "delta", "delta_inv", "Row", "Tableau", "fill_1", "fill_2", "row", "virtual_kleber",
    "rc_virtualize",
]
