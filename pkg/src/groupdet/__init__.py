"""Integer group determinants for the semidihedral group SD16 and its relatives."""
from .cyclotomic import CyclotomicElement, NonScalarProduct, cyc_mul, cyc_reduce, galois_apply, orbit_norm
from .determinants import (D8, M16, M32, SD16, SD32, FactoredGeneral, FactoredM, FactoredSD16,
                           FormulaMismatch, GroupSpec, cayley_table, dihedral_cross_check,
                           m16_factored, m_factored, regular_determinant, sd16_factored,
                           sd_general_factored)
from .group_ring import (GroupRingElement, TwistMap, fold_to_d8, format_element, gr_identity,
                         gr_multiply, parse_element)
from .number_theory import Verdict, classify, cornacchia2, factorize, legendre_minus2
from .witness import NotAchievable, WitnessResult, witness

__version__ = "0.1.0"
