"""covercalc: exact covering-type invariants of finite topological spaces.

The package models finite spaces through their minimal-open-set tables,
runs a relation algebra of reflexive entourages and their directed powers,
computes every catalogued covering invariant exactly with certified
witnesses, and ships a theorem harness that checks the calculus's
inequalities and identities against independent brute-force oracles.
"""

from .bitset import full_mask, iter_bits, mask_of, points_of
from .cover import OpenCover, enumerate_covers, enumerate_irredundant_covers, minimal_cover
from .entourage import CarrierMismatch, Entourage
from .invariants import (
    InvariantReport,
    SpaceInvariants,
    full_report,
    oracle_star,
    oracle_verbal,
)
from .solver import (
    MIN_COVER,
    MIN_HITTING,
    CoverInstance,
    Infeasible,
    Solution,
    SubsetInstance,
    max_subset,
    min_cover,
)
from .space import (
    BudgetExceeded,
    FiniteSpace,
    NotATopology,
    UnknownName,
    antidiscrete,
    chain,
    count_reflexive_transitive_relations,
    discrete,
    enumerate_all_spaces,
    generate_topology,
    named,
    one_nonisolated,
    partition_space,
    random_space,
    sierpinski,
    zigzag,
)
from .verify import (
    CLAIMS,
    Claim,
    SweepReport,
    TheoremReport,
    UnknownClaim,
    check,
    claim_ids,
    get_claim,
    sweep,
)
from .words import EMPTY, MINUS, MINUS_FIRST, PLUS, PLUS_FIRST, Word, all_words

__all__ = [
    "CLAIMS",
    "BudgetExceeded",
    "CarrierMismatch",
    "Claim",
    "CoverInstance",
    "EMPTY",
    "Entourage",
    "FiniteSpace",
    "Infeasible",
    "InvariantReport",
    "MINUS",
    "MINUS_FIRST",
    "MIN_COVER",
    "MIN_HITTING",
    "NotATopology",
    "OpenCover",
    "PLUS",
    "PLUS_FIRST",
    "Solution",
    "SpaceInvariants",
    "SubsetInstance",
    "SweepReport",
    "TheoremReport",
    "UnknownClaim",
    "UnknownName",
    "Word",
    "all_words",
    "antidiscrete",
    "chain",
    "check",
    "claim_ids",
    "count_reflexive_transitive_relations",
    "discrete",
    "enumerate_all_spaces",
    "enumerate_covers",
    "enumerate_irredundant_covers",
    "full_mask",
    "full_report",
    "generate_topology",
    "get_claim",
    "iter_bits",
    "mask_of",
    "max_subset",
    "min_cover",
    "minimal_cover",
    "named",
    "one_nonisolated",
    "oracle_star",
    "oracle_verbal",
    "partition_space",
    "points_of",
    "random_space",
    "sierpinski",
    "sweep",
    "zigzag",
]

__version__ = "0.1.0"
