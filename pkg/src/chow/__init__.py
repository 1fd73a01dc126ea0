"""Exact computation and certification of Chow polynomials of posets,
lower-triangular matrices and Toeplitz series."""

from .poly import Polynomial, GammaVector, reciprocal, s_op, gamma_extract, gamma_expand, is_palindromic
from .ring import MPoly
from .poset import Poset, boolean_algebra, subspace_lattice, partition_lattice, paving_extension
from .incidence import IncidenceFunction, chow_pair, aug_pair, chow_via_kernel, chow_via_chains, characteristic
from .ltmatrix import LTMatrix, ChowFamily, chow_family, pascal, gaussian, toeplitz
from .minors import minor, is_tn, gamma_chow
from .realroot import is_real_rooted, interlaces, isolate_real_roots
from .resolution import resolve, verify_resolution
from .toeplitz import TruncatedSeries, chow_series, truncated_family_series

__version__ = "0.1.0"
