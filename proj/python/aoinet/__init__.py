"""Age-of-information transmission policies for spatial random-access networks.

Thin Python layer over the C++ core: topologies, the capture-channel AoI map,
the weighted-sum / min-max / proportionally-fair / topology-agnostic policy
solvers, a slotted Monte Carlo simulator, and the bound/asymptotics checks.
"""

from ._core import (  # noqa: F401
    HALF_E,
    BoundaryPoint,
    BoundReport,
    ConvergenceError,
    ConvexityReport,
    ExperimentSpec,
    IoError,
    Policy,
    SimConfig,
    SimResult,
    SolverConfig,
    SolverReport,
    TaConvergenceReport,
    TaConvergenceRow,
    Topology,
    ZpfMoments,
    ZpfSample,
    __version__,
    baseline_aloha,
    check_bounds,
    convexity_probe,
    expected_aoi,
    finite_n_upper_bound,
    load_topology,
    pareto_coordinate,
    pareto_point,
    pareto_residual_function,
    run_experiment,
    sample_uniform_disk,
    sample_zpf,
    save_topology,
    simulate,
    solve_ews,
    solve_mm,
    solve_pf,
    solve_ta,
    spec_from_json,
    spec_to_json,
    success_probabilities,
    success_probability,
    symmetric_topology,
    ta_convergence_experiment,
    ta_policy,
    topology_from_json,
    topology_to_json,
    trace_pareto_boundary,
    zpf_statistics,
)
