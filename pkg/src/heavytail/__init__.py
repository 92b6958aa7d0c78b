"""Heavy-tailed samples, scale-free random graphs and degree-degree dependency measures."""

from .estimators import (
    assortativity_lower_bound,
    graph_assortativity,
    graph_spearman,
    pearson,
    ranks_descending,
    spearman,
)
from .graphs import (
    BipartitePairList,
    Graph,
    bipartite_collection,
    configuration_model,
    erase_parallel_and_loops,
    insert_intermediate_vertices,
    preferential_attachment,
    read_edgelist,
    sample_bipartite_pairs,
    write_edgelist,
)
from .montecarlo import EstimateSummary, ModelConfig, empirical_cdf, ks_distance, run_estimators, run_replications
from .pair_models import LinearModel, PairedSample, sample_linear_pairs, sample_mixture_pairs
from .sampling import (
    DegreeSequence,
    GeneralizedParetoLaw,
    ParetoLaw,
    Seed,
    sample_degree_sequence,
    sample_generalized_pareto,
    sample_pareto,
    stable_norming_constant,
)
from .theory import (
    MomentTriple,
    bipartite_limit_interval,
    intermediate_cm_rho_limit,
    mixture_rho_limit,
    pareto_moments,
    support_lower_bound,
)

__version__ = "0.1.0"
