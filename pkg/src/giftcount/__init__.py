"""Exact counts for the gift-exchange game and restricted Stirling numbers."""

from .errors import (
    GiftcountError,
    GuardError,
    InconsistencyError,
    PreconditionError,
    SingularityError,
)
from .exact_arith import Polynomial, PowerSeries
from .genfun import EgfCheckReport, check_egf_e, check_egf_g1_closed_form, check_g1_ode
from .guesser import GuessQuery, guess_recurrence, verify_spec_on_terms
from .oracle import (
    GameConfig,
    count_full_game_playouts,
    count_gamma_sequences,
    count_restricted_partitions,
    iter_gamma_sequences,
)
from .sequences import (
    RecurrenceSpec,
    SequenceRun,
    asymptotic_ratio,
    asymptotic_sigma2,
    bessel_y,
    builtin_recurrence,
    builtin_recurrences,
    g_by_recurrence,
    g_by_sum,
    g_moments,
    g_multinomial,
    run_recurrence,
)
from .stirling import (
    ETable,
    HypSpec,
    e1_closed,
    e2_hypergeometric,
    e2_sum,
    e_miller,
    e_multinomial,
    e_table_vertical,
    hyp_terminating,
    validate_e_identities,
)

__version__ = "0.1.0"
