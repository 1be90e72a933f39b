"""Exact eigenmatrices of classical association schemes.

Scheme strings name a family and its parameters, e.g. "hamming:d=4,q=3",
"johnson:n=8,d=3", "grassmann:q=2,n=8,d=3", "dualpolar:q=2,d=5,e=1",
"bilinear:q=2,d=2,e=3", "alternating:q=2,n=5", "hermitian:q=2,d=3".
All values are exact: matrices come back as Python ints, report documents
mirror the command line's JSON output.
"""

from ._core import (
    HypothesisError,
    InvalidParameters,
    __version__,
    analyze,
    bound_ids,
    catalog,
    check_bound,
    chvatal,
    component_srg_params,
    connected_components,
    distinct_count,
    eigen_entry,
    eigenvalues,
    form_count,
    identities,
    largebeta_onset,
    multiplicities,
    pmatrix,
    q0_threshold,
    scan,
    srg_params,
    verify,
    vertex_count,
    zero_scan,
)

__all__ = [
    "HypothesisError",
    "InvalidParameters",
    "__version__",
    "analyze",
    "bound_ids",
    "catalog",
    "check_bound",
    "chvatal",
    "component_srg_params",
    "connected_components",
    "distinct_count",
    "eigen_entry",
    "eigenvalues",
    "form_count",
    "identities",
    "largebeta_onset",
    "multiplicities",
    "pmatrix",
    "q0_threshold",
    "scan",
    "srg_params",
    "verify",
    "vertex_count",
    "zero_scan",
]
