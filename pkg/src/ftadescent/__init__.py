"""Complex polynomial roots by descent on |P|^2 along Estermann directions,
with an exact verifier for the Estermann lemma."""

from .descent import (
    ConvergenceError, DescentConfig, DescentTrace, RootResult, descent_step,
    estimate_multiplicity, find_all_roots, find_root, nth_root, verify_remark2_bound,
)
from .estermann import (
    LemmaReport, candidates, estermann_zeta, select_direction, verify_lemma,
    zeta_pow_via_binomial,
)
from .gaussian import GaussianRational, gq_field_op, gq_pow, gq_signs
from .poly import (
    LocalForm, Polynomial, binomial, deflate, evaluate, local_form, root_bound,
    scale, taylor_shift,
)

__version__ = "0.1.0"
