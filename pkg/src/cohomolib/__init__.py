"""Exact decision procedures for equivariant cohomological pullbacks
between complete flag manifolds of semisimple complex Lie groups."""

from .bwb import BottResult, reciprocity_check, resolve
from .cohom import (C_monoid_probe, D_monoid_points, MonoidSample,
                    PullbackResult, adjoint_pullback, composed_decide,
                    decide_pullback, diagonal_decide,
                    enumerate_disjoint_triples, invariant_degrees,
                    principal_classify, regular_decide, trivial_morphisms)
from .config import BudgetError, Config, UserError
from .embed import (EmbeddingDescriptor, adjoint_setup, build_composed,
                    build_diagonal, build_explicit, build_principal_sl2,
                    build_regular_subsystem, descriptor_from_json,
                    principal_fundamental_values)
from .hwmodule import (FormalCharacter, HWModule, construct_module,
                       decompose_character, freudenthal_character,
                       generated_submodule, symmetric_power_character,
                       tensor_decompose, trivial_multiplicity, weyl_dimension)
from .liecoh import (CohomologySlice, chevalley_eilenberg_cohomology,
                     kostant_cohomology, trivial_coeff_cohomology)
from .rootdata import CartanType, RootSystem, Weight, build_root_system
from .weyl import (RegularizationResult, WeylElement, enumerate_weyl,
                   from_inversion_set, inversion_set, longest_element,
                   make_dominant)

__version__ = "0.1.0"
