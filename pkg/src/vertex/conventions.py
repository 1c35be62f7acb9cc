"""
The vertex convention ledger.

Every published number depends on these choices, so output documents carry
the hash of this text.
"""

import hashlib

from src.config import settings

LEDGER = f"""\
variable: t = q^(1/2)
specialization: s_lambda(q^(-nu-rho)) with x_i = t^(2i-1-2 nu_i)
schur_principal: t^(|lambda| + 2 n(lambda)) / prod_cells (1 - t^(2 h))
kappa: sum_i lambda_i (lambda_i - 2i + 1)
vertex: C(lambda, mu, nu) = t^kappa(mu) s_nu^T(q^-rho) sum_eta s_(lambda^T/eta)(q^(-nu-rho)) s_(mu/eta)(q^(-nu^T-rho))
slots: outgoing web directions in counter-clockwise order
web_direction: outward normal (dy, -dx) of the triangle side a -> b
edge_orientation: source is the lower cone index and carries lambda, the target carries lambda^T
framing: n = u_target ^ u_source, u the direction following the edge counter-clockwise
edge_factor: (-1)^((n+1)|lambda|) t^(-n kappa(lambda)) Q^(|lambda| class)
free_energy: F = log Z, graded by a pairing positive on every wall class
genus_zero: N = sigma * lim_(t->1) (t - 1/t)^2 F, sigma = {settings.EXTRACTION_SIGN}
multicover: n_beta = N_beta - sum_(k>=2, k | beta) n_(beta/k) / k^3
"""


def ledger_hash() -> str:
    """sha256 hex digest of the ledger text."""
    return hashlib.sha256(LEDGER.encode("utf-8")).hexdigest()
