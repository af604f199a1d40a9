"""Small covers of simplicial complexes with exact torsion verification."""

from ._core import (  # noqa: F401
    Bundle,
    Complex,
    __version__,
    build_moore_instance,
    build_twisted_bundle,
    cone,
    cycle_graph,
    homology,
    join_complexes,
    normal_form,
    read_bundle,
    read_complex,
    simplex,
    simplex_boundary,
    smith_normal_form,
    subdivide,
    verify,
    write_bundle,
    write_complex,
)
