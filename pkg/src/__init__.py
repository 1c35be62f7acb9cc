"""
Genus-zero open and closed Gromov-Witten invariants of toric Calabi-Yau threefolds.
"""

__version__ = "0.1.0"
