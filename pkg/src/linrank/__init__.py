"""Rank and kernel dimension of linearized polynomials over finite fields.

The rank of x -> f(x) on F_{q^n} is read off from the first nonvanishing
minor in a chain of Dickson-matrix minors, or equivalently from scalar
q-subresultants of f and x^(q^n) - x.  Brute-force oracles for every
routine live alongside the fast paths.
"""

from .field import FieldCtx, FieldParams, GF, make_field_ctx
from .linpoly import (KernelReport, LinearizedPoly, lp_compose, lp_eval, lp_gcrd,
                      lp_kernel_brute, lp_ordinary_gcd_oracle, lp_right_divide)
from .matrix import MatrixF, bordered_block_det, det, rank_nullity, schur_block_det
from .dickson import (RankCertificate, dickson_matrix, dickson_minor, dickson_sigma,
                      minor_MJK, rank_via_minor_chain, rank_via_minor_chain_sigma)
from .subres import (SubresChain, build_subresultant_padded, build_subresultant_q,
                     classical_gcd_deg, classical_subresultant, gcd_qdeg_via_subres,
                     padded_chain, structural_shrink_check, subres_nullity)
from .apps import (WeightSpectrum, direction_count_brute, h_eval, mrd_search_9,
                   scattered_check, weight_spectrum)

__version__ = "0.1.0"
