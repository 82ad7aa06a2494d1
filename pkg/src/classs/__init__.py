"""Exact characters, central charges and OPE audits for the genus-zero
class-S chiral algebras and their building blocks."""

from .affchar import (f_factor, simple_char, weyl_module_char,
                      weyl_module_char_numerator_method, z_char, zbar_char)
from .chiral import (ClassSCharacter, ClassSSpec, NilpotentData,
                     betagamma_char, betagamma_fock_count,
                     central_charge_class_s, central_charge_ds_reduction,
                     central_charge_equiv_w, central_charge_I_ff,
                     central_charge_universal_centralizer, class_s_char,
                     class_s_recursion_check, class_s_sector_char,
                     conformal_weight_h_lambda, eisenstein_check_expansion,
                     ghost_central_charges, mt_dimension,
                     principal_nilpotent_data, sugawara_central_charge)
from .exactalg import (LaurentPoly, PoleError, QSeries, RationalFunctionK,
                       qs_geom_inverse, qs_mul, rf_eval)
from .finchar import (DominantCharacter, enumerate_dominant,
                      freudenthal_character, full_character, weyl_dimension)
from .opeaudit import (OpeEntry, OpeTable, builtin_ope_table, check_primary,
                       check_weight_homogeneity, extract_central_charge)
from .rootsys import (Coweight, RootSystem, Weight, build_root_system,
                      normalized_form, pairing, parse_algebra)

__version__ = "0.1.0"
