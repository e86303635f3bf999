"""Union-closed set families over small ground sets.

Exact integer machinery for the union-closed sets conjecture and its
strengthened at-least-T-abundant-elements form: family algebra on
bitmasks, structural decompositions, isomorph-free exhaustive
enumeration with a brute-force oracle, and campaign-level verification
with deterministic reports.
"""

from .core import (
    FrequencyProfile,
    Lemma12Result,
    LevelProfile,
    Mask,
    SetFamily,
    elements_of_mask,
    frankl_holds,
    frequency_profile,
    full_mask,
    is_union_closed,
    lemma_1_2_bound,
    level_profile,
    mask_from_elements,
    relabel_family,
    relabel_mask,
    s_frankl_holds,
    t_value,
    union_closure,
)
from .decomposition import (
    SHAPE_TAGS,
    AbundanceWitness,
    PairDecomposition,
    ShapeClass,
    abundance_witness,
    classify_shape,
    pair_decompose,
    residue_union_signature,
)
from .enumeration import (
    BRUTE_FORCE_POOL_CAP,
    CanonicalKey,
    EnumerationConstraints,
    brute_force_enumerate,
    canonical_form,
    canonical_key,
    ensure_enumerable,
    enumerate_families,
    enumerate_job,
    job_depth,
    job_label,
    subtree_jobs,
)
from .errors import (
    CampaignIncomplete,
    DegenerateFamily,
    InfeasibleScale,
    NoNonemptyMember,
    NotApplicable,
    NotInScope,
    ParseError,
    PreconditionViolation,
    UcfError,
    WitnessUnavailable,
)
from .fileformat import family_line, format_family, parse_family
from .verifier import (
    CHECK_NAMES,
    CheckRecord,
    VerificationReport,
    check_single,
    run_campaign,
)

__all__ = [
    "AbundanceWitness",
    "BRUTE_FORCE_POOL_CAP",
    "CampaignIncomplete",
    "CanonicalKey",
    "CheckRecord",
    "CHECK_NAMES",
    "DegenerateFamily",
    "EnumerationConstraints",
    "FrequencyProfile",
    "InfeasibleScale",
    "Lemma12Result",
    "LevelProfile",
    "Mask",
    "NoNonemptyMember",
    "NotApplicable",
    "NotInScope",
    "PairDecomposition",
    "ParseError",
    "PreconditionViolation",
    "SetFamily",
    "ShapeClass",
    "SHAPE_TAGS",
    "UcfError",
    "VerificationReport",
    "WitnessUnavailable",
    "abundance_witness",
    "brute_force_enumerate",
    "canonical_form",
    "canonical_key",
    "check_single",
    "classify_shape",
    "elements_of_mask",
    "ensure_enumerable",
    "enumerate_families",
    "enumerate_job",
    "family_line",
    "format_family",
    "frankl_holds",
    "frequency_profile",
    "full_mask",
    "is_union_closed",
    "job_depth",
    "job_label",
    "lemma_1_2_bound",
    "level_profile",
    "mask_from_elements",
    "pair_decompose",
    "parse_family",
    "relabel_family",
    "relabel_mask",
    "residue_union_signature",
    "run_campaign",
    "s_frankl_holds",
    "subtree_jobs",
    "t_value",
    "union_closure",
]
