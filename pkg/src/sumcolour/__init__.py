"""Exact-arithmetic colourings that break monochromatic k-fold sumsets,
digit constructions that trap kH inside a target set, and a search
harness whose findings ship as re-verifiable certificates."""
from .bands import (BandParams, band_colour, band_index, band_params,
                    band_property_check, sample_band)
from .certificates import MalformedCert, seal, verify_cert
from .conflict import m_p, nofix_colour, prime_split, psi_p, r_p
from .digits import (CylinderUnion, DigitSeq, build_H, find_cylinder_in,
                     greedy_baire, measure, robust_core, shrink_iterate,
                     translate_digit)
from .exact import flog, format_rational, parse_rational, translate_witness
from .gamma import case_generator, gamma, separate, support_stats
from .intervals import IntervalSet
from .phi import a_p, decompose, n_p
from .registry import ColouringRef, UnknownColouring, resolve
from .search import BudgetExceeded, Exhausted, enumerate_ground, search_mono
from .seqs import as_seq, seq_scale, seq_sum
from .stepup import chain_check, mu_eta, tau, xi
from .support import (WellOrder, family_generator, positive_family,
                      psi_support, quadruple_check)

__version__ = "0.1.0"
