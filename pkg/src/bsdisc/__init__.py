"""Discriminators of the sequences u_q(j) = (3^j - q*(-1)^j)/4."""

__version__ = "0.1.0"

from .discriminator import disc_brute, disc_closed, disc_table, f_exponents, value_set
from .indices import h_universal, incongruence_index
from .period import period_brute, period_closed
from .primeclass import classify, density_scan
from .sequence import make_spec, term_exact, term_mod

__all__ = [
    "make_spec", "term_exact", "term_mod",
    "period_closed", "period_brute",
    "incongruence_index", "h_universal",
    "classify", "density_scan",
    "disc_brute", "disc_closed", "disc_table", "f_exponents", "value_set",
]
