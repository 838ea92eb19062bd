"""Generators, exhaustive enumeration and the claim-checking harness."""
from .claims import LEMMA_CLAIMS, REGISTRY, SKEW_CLAIMS, BindingOverflow, Claim, get_claim, register, unregister
from .enumeration import BUILTIN_MAX_N, EnumerationTooLarge, enumerate_all_graphs
from .generators import FAMILIES, GeneratorSpec, generate, sample_seed, validate
from .suite import (
    CorpusReport,
    Exhaustive,
    FileSource,
    LemmaCounterexample,
    Sampled,
    check_graph,
    run_suite,
    run_suites,
)

__all__ = [
    "BUILTIN_MAX_N", "BindingOverflow", "Claim", "CorpusReport", "EnumerationTooLarge",
    "Exhaustive", "FAMILIES", "FileSource", "GeneratorSpec", "LEMMA_CLAIMS",
    "LemmaCounterexample", "REGISTRY", "SKEW_CLAIMS", "Sampled", "check_graph",
    "enumerate_all_graphs", "generate", "get_claim", "register", "run_suite",
    "run_suites", "sample_seed", "unregister", "validate",
]
