"""Mirror-shift superpermutation generator, verifier and analytics.

Symbols are 0-based integers; beads are passed as their n-symbol core.
"""

from ._core import (
    CapacityExceeded,
    MalformedInput,
    expand,
    generate,
    generate_stats,
    initial_bead,
    intersection_count,
    intersections_by_ring_order,
    length_closed_form,
    length_report,
    length_sum_factorials,
    mirror_sequence,
    mirror_shift,
    mirror_unshift,
    operation_count,
    rank_permutation,
    recursive_superperm,
    straight_shift,
    straight_unshift,
    trailing_bead,
    unrank_permutation,
    verify,
)

GLYPHS = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"


def render(seq):
    """Render 0-based symbols with the plain-format glyph table."""
    return "".join(GLYPHS[s] for s in seq)


__all__ = [name for name in dir() if not name.startswith("_")]
