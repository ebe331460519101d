"""Anti-power prefixes of the Thue-Morse word."""

from ._backend import BACKEND
from .anti_power import (
    AntiPowerReport,
    BlockDecomposition,
    ComplementSet,
    DomainError,
    InvariantViolation,
    KappaResult,
    ScanRow,
    anti_power_report,
    big_gamma,
    complement_set,
    doubling_check,
    f_membership,
    gamma,
    is_k_anti_power_prefix,
    kappa,
    kappa_lambda,
    scan,
)
from .words import (
    FactorSpec,
    Morphism,
    Word,
    a_n,
    apply_morphism,
    b_n,
    check_fact1,
    find_equal_factors,
    tm_factor,
    tm_letter,
    tm_prefix_packed,
)

__version__ = "0.1.0"
