"""HP-model protein folding on the 2D triangular lattice."""

from ._hpfold import (
    benchmark_instances,
    contacts,
    decode,
    energy,
    enumerate_optimal,
    expand,
    export_ilp,
    render_ascii,
    render_svg,
    solve,
)

__all__ = [
    "benchmark_instances",
    "contacts",
    "decode",
    "energy",
    "enumerate_optimal",
    "expand",
    "export_ilp",
    "render_ascii",
    "render_svg",
    "solve",
]
