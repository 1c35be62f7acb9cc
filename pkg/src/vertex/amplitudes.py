"""
Vertex amplitudes and edge gluing factors.
"""

from functools import lru_cache

from src.qpartitions.partitions import Partition, conjugate, contains, kappa, size, sub_partitions
from src.qpartitions.qrational import QRational
from src.qpartitions.schur import schur_principal, skew_schur_specialized


@lru_cache(maxsize=None)
def vertex_amplitude(lam: Partition, mu: Partition, nu: Partition) -> QRational:
    """
    C(lam, mu, nu) with the three partitions in counter-clockwise slot order.

    Cyclically symmetric in its arguments; C(0, 0, 0) = 1.
    """
    lam_t = conjugate(lam)
    terms = [
        skew_schur_specialized(lam_t, eta, nu) * skew_schur_specialized(mu, eta, conjugate(nu))
        for eta in sub_partitions(lam_t) if contains(mu, eta)
    ]
    prefactor = schur_principal(conjugate(nu)) * QRational.monomial(1, kappa(mu))
    return (prefactor * QRational.sum(terms)).reduced()


@lru_cache(maxsize=None)
def edge_factor(lam: Partition, framing: int) -> QRational:
    """(-1)^((n+1)|lam|) t^(-n kappa(lam)) for an edge of framing n."""
    sign = -1 if (framing + 1) * size(lam) % 2 else 1
    return QRational.monomial(sign, -framing * kappa(lam))
