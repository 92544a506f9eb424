"""Exact subpencil decisions and completions for pencils with column minimal indices."""

from .completion import (CompletionResult, complete, complete_rm, is_subpencil_cm, is_subpencil_rm,
                         verify_completion, verify_completion_rm)
from .criteria import (SubfactorWitness, compute_b_sequence, epi_with_P0_kernel, mono_exists,
                       ses_with_I0_cokernel, subfactor_check, subfactor_check_preproj, shift_transform)
from .errors import *  # noqa: F401,F403
from .exactmat import GF, QQ, Field, Matrix
from .kroncore import DimVector, PreinjInvariants, PreprojInvariants, defect_of, dim_of, from_epsilon_list
from .morphisms import (MorphismPair, Representation, canonical_representation, construct_epimorphism_P0_kernel,
                        construct_monomorphism, verify_morphism)
from .pencil import Pencil, minimal_column_indices, pencil_of_module, scramble, strictly_equivalent_cm

__version__ = "0.1.0"
