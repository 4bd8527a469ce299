"""Python interface to the necklace verification toolkit."""

try:
    from ._necklace import (
        central_residual,
        dimension_audit,
        growth_vector,
        jacobian_summary,
        limit_graph_height,
        minimal_growths,
        quartic_pair_comparison,
        validate_schedule,
    )
except ImportError:  # extension on sys.path directly (in-tree test runs)
    from _necklace import (
        central_residual,
        dimension_audit,
        growth_vector,
        jacobian_summary,
        limit_graph_height,
        minimal_growths,
        quartic_pair_comparison,
        validate_schedule,
    )

__all__ = [
    "central_residual",
    "dimension_audit",
    "growth_vector",
    "jacobian_summary",
    "limit_graph_height",
    "minimal_growths",
    "quartic_pair_comparison",
    "validate_schedule",
]
