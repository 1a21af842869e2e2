"""lseqkit: l-sequences, 2-adic correlation, and distinctness verification.

The package covers three layers:

  * generation: l-sequences from odd prime powers with 2 primitive, via a
    carry register, a 2-adic rational expansion, and a closed form;
  * sequence operators: decimation, cyclic shifts, cyclic matching, and the
    arithmetic (with-borrow) cross-correlation;
  * verification: exhaustive distinctness checks over single moduli or
    sweeps, the p-adic level machinery behind them, and the counterexample
    catalogue at the excluded moduli {5, 9, 11, 13}.
"""

from .errors import InvariantViolation
from .fcsr import (
    BinarySequence,
    DyadicExpansion,
    dyadic_expansion,
    fcsr_run,
    lseq_exponential,
    lseq_rational,
    lsequence,
)
from .numtheory import (
    Modulus,
    eligible_moduli,
    euler_phi,
    factorize,
    is_prime,
    is_primitive_root,
    multiplicative_order,
    primitive_roots,
)
from .ring import (
    Lemma2Instance,
    Lemma4Result,
    LevelStructure,
    ResidueSequence,
    alpha_sequence,
    check_lemma1,
    check_lemma4,
    check_prop2,
    compute_hf,
    find_distinguishing_j,
    generate,
    highest_level_mod2_witness,
    lemma2_brute_force,
    level_structure,
    mod2_projection,
    prop2_witness,
)
from .seqops import (
    CorrelationResult,
    arithmetic_crosscorrelation,
    complement,
    cyclic_match,
    decimate,
    ideal_crosscorrelation,
    minimal_period,
    shift,
)
from .verify import (
    EXCLUDED_MODULI,
    DecimationWitness,
    Lemma5Diagnostics,
    RootPairDigits,
    RootWitness,
    VerificationReport,
    find_counterexamples,
    sweep,
    theorem2_witness,
    verify_conjecture_decimation_form,
    verify_ideal_correlation,
    verify_lemma5,
    verify_theorem1_root_form,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "InvariantViolation",
    "BinarySequence",
    "DyadicExpansion",
    "dyadic_expansion",
    "fcsr_run",
    "lseq_exponential",
    "lseq_rational",
    "lsequence",
    "Modulus",
    "eligible_moduli",
    "euler_phi",
    "factorize",
    "is_prime",
    "is_primitive_root",
    "multiplicative_order",
    "primitive_roots",
    "Lemma2Instance",
    "Lemma4Result",
    "LevelStructure",
    "ResidueSequence",
    "alpha_sequence",
    "check_lemma1",
    "check_lemma4",
    "check_prop2",
    "compute_hf",
    "find_distinguishing_j",
    "generate",
    "highest_level_mod2_witness",
    "lemma2_brute_force",
    "level_structure",
    "mod2_projection",
    "prop2_witness",
    "CorrelationResult",
    "arithmetic_crosscorrelation",
    "complement",
    "cyclic_match",
    "decimate",
    "ideal_crosscorrelation",
    "minimal_period",
    "shift",
    "EXCLUDED_MODULI",
    "DecimationWitness",
    "Lemma5Diagnostics",
    "RootPairDigits",
    "RootWitness",
    "VerificationReport",
    "find_counterexamples",
    "sweep",
    "theorem2_witness",
    "verify_conjecture_decimation_form",
    "verify_ideal_correlation",
    "verify_lemma5",
    "verify_theorem1_root_form",
]
