# Copyright 2026 The famtree authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Random family trees with linear preferential attachment.

Thin wrapper over the C++ extension. Two attachment rules are available:
``linear`` weights a vertex by its degree plus ``beta`` and ``port`` by its
number of children plus ``beta``. Watched-vertex degrees, suitably
normalized, converge to a product of a root limit and independent Beta
factors; :func:`limit_moment` gives that limit's moments and
:func:`run_grow` the matching simulations.
"""

from ._core import (
    BetaFactor,
    ColoringSnapshot,
    CriterionResult,
    ExactDistribution,
    ExperimentConfig,
    GrowTable,
    GrowthRun,
    KsResult,
    Label,
    LimitLaw,
    ModelKind,
    MomentEstimate,
    RandomStream,
    ReplacementMatrix,
    TrajectoryTable,
    UrnState,
    UrnTrajectory,
    ValidateOptions,
    ValidateReport,
    beta_cdf,
    derive_stream_seed,
    empirical_moment,
    enumerate_exact,
    format_label,
    generalized_run,
    geometric_checkpoints,
    grow,
    grow_summary_json,
    has_closed_form_root,
    ks_one_sample,
    ks_two_sample,
    limit_moment,
    mix64,
    model,
    parse_label,
    polya_final_fraction,
    polya_run,
    port_martingale_value,
    root_limit_cdf,
    run_grow,
    run_validate,
    zeta0_moment,
)

__all__ = [
    "BetaFactor",
    "ColoringSnapshot",
    "CriterionResult",
    "ExactDistribution",
    "ExperimentConfig",
    "GrowTable",
    "GrowthRun",
    "KsResult",
    "Label",
    "LimitLaw",
    "ModelKind",
    "MomentEstimate",
    "RandomStream",
    "ReplacementMatrix",
    "TrajectoryTable",
    "UrnState",
    "UrnTrajectory",
    "ValidateOptions",
    "ValidateReport",
    "beta_cdf",
    "derive_stream_seed",
    "empirical_moment",
    "enumerate_exact",
    "format_label",
    "generalized_run",
    "geometric_checkpoints",
    "grow",
    "grow_summary_json",
    "has_closed_form_root",
    "ks_one_sample",
    "ks_two_sample",
    "limit_moment",
    "mix64",
    "model",
    "parse_label",
    "polya_final_fraction",
    "polya_run",
    "port_martingale_value",
    "root_limit_cdf",
    "run_grow",
    "run_validate",
    "zeta0_moment",
]

__version__ = "0.1.0"
