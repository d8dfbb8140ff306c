"""Evidence-based belief dynamics on social networks.

Agents hold a fixed structure of understanding over a pool of paired
positive/negative evidence, exchange evidence confidence with their neighbors
(including a backfire rule for opposite evidence), and mix self-reasoning with
the social norm Friedkin-Johnsen style. Everything is seed-reproducible.
"""

from .agents import (
    init_confidence_polarized,
    init_confidence_random,
    init_understanding,
    random_half_groups,
    self_reasoning,
)
from .config import ConfigError, SimConfig, parse_config, serialize_config
from .dynamics import (
    SimState,
    advance,
    initial_state,
    oracle_step,
    run_simulation,
    step_beliefs,
    step_evidence,
)
from .experiments import (
    SweepResult,
    TRIAL_KINDS,
    belief_histogram,
    belief_std,
    run_config,
    run_trial,
    sweep,
    trial_config,
)
from .graphs import (
    Graph,
    NotScalableError,
    WeightMatrix,
    connected_components,
    generate_er,
    generate_two_community,
    giant_component_fraction,
    sinkhorn_normalize,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "Graph",
    "NotScalableError",
    "SimConfig",
    "SimState",
    "SweepResult",
    "TRIAL_KINDS",
    "WeightMatrix",
    "advance",
    "belief_histogram",
    "belief_std",
    "connected_components",
    "generate_er",
    "generate_two_community",
    "giant_component_fraction",
    "init_confidence_polarized",
    "init_confidence_random",
    "init_understanding",
    "initial_state",
    "oracle_step",
    "parse_config",
    "random_half_groups",
    "run_config",
    "run_simulation",
    "run_trial",
    "self_reasoning",
    "serialize_config",
    "sinkhorn_normalize",
    "step_beliefs",
    "step_evidence",
    "sweep",
    "trial_config",
]
