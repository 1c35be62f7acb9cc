"""
Partitions, exact q-arithmetic and Schur function specializations.
"""

from .laurent import LaurentPoly
from .partitions import Partition, conjugate, hooks, kappa, partitions_of, partitions_up_to
from .qrational import QRational, QSeriesCap, qrational_arith
from .schur import complete_homogeneous, elementary_symmetric, schur_principal, skew_schur_specialized


def limit_at_one(f: QRational):
    """Exact value of f at t = 1; raises PoleError on a pole."""
    return QRational.coerce(f).limit_at_one()


__all__ = [
    "LaurentPoly",
    "Partition",
    "QRational",
    "QSeriesCap",
    "complete_homogeneous",
    "conjugate",
    "elementary_symmetric",
    "hooks",
    "kappa",
    "limit_at_one",
    "partitions_of",
    "partitions_up_to",
    "qrational_arith",
    "schur_principal",
    "skew_schur_specialized",
]
