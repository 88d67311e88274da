"""Weighted L_p-norms, Renyi divergences, channels and hypothesis testing.

Matrices are numpy arrays; states are density matrices, channels are lists of
Kraus operators K (out x in) with sum K^dagger K = 1.
"""

import json

from . import _core
from ._core import (
    RenyilabError,
    alt_check,
    apply_channel,
    dmax,
    dpi_check,
    exponent_empirics,
    fidelity,
    interpolation_check,
    petz,
    random_channel,
    random_density,
    renyi_limit,
    sandwiched,
    sandwiched_via_norm,
    state_norm,
    strong_converse_exponent,
    suite_names,
    umegaki,
    variational_norm,
    vector_norm,
)


def verify(seeds, dims, suites=None, tolerances=None, jobs=1):
    """Run the verification suites and return the report as a dict."""
    config = {"seeds": list(seeds), "dims": list(dims), "suites": list(suites or suite_names()), "jobs": jobs}
    if tolerances:
        config["tolerances"] = dict(tolerances)
    return json.loads(_core._verify_json(json.dumps(config)))

