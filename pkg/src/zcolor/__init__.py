"""Integer colorings of link diagrams.

Exact tooling for diagrams colored by integers under the crossing relation
2 * over = under + under: integer linear algebra (Smith normal form, integer
kernels, determinants), a combinatorial diagram model with a JSON file
format, generators for pretzel and closed-braid torus diagrams, coloring
solvers, and minimal distinct-color search.
"""

from .coloring import (
    ColoringCheck,
    ColoringSpace,
    ZColoring,
    coloring_matrix,
    coloring_space,
    count_colors,
    fox_colorable,
    is_z_colorable,
    link_determinant,
    load_coloring,
    normalize,
    save_coloring,
    torus_coloring,
    torus_column_states,
    verify_coloring,
)
from .diagram import (
    Crossing,
    Diagram,
    ValidationReport,
    is_connected,
    link_components,
    load_diagram,
    parse,
    save_diagram,
    serialize,
    validate,
)
from .errors import (
    DiagramFormatError,
    DiagramTooLargeError,
    InvalidSpecError,
    NotApplicableError,
    NotZColorableError,
    ShapeError,
    TheoremHypothesisError,
    UnrepresentableDiagramError,
    UnsupportedDiagramError,
    ValidationError,
    ZColorError,
)
from .generators import (
    PretzelSpec,
    TorusSpec,
    build_torus_matrix,
    gen_pretzel,
    gen_torus,
    pretzel_twist_chains,
    torus_arc_grid,
)
from .intlinalg import (
    IntMatrix,
    KernelBasis,
    SmithDecomposition,
    determinant,
    integer_kernel,
    mat_vec,
    smith_normal_form,
)
from .mincolor import MinColorResult, brute_force_min, color_set, min_colors

__version__ = "0.1.0"

__all__ = [
    "ColoringCheck",
    "ColoringSpace",
    "Crossing",
    "Diagram",
    "DiagramFormatError",
    "DiagramTooLargeError",
    "IntMatrix",
    "InvalidSpecError",
    "KernelBasis",
    "MinColorResult",
    "NotApplicableError",
    "NotZColorableError",
    "PretzelSpec",
    "ShapeError",
    "SmithDecomposition",
    "TheoremHypothesisError",
    "TorusSpec",
    "UnrepresentableDiagramError",
    "UnsupportedDiagramError",
    "ValidationError",
    "ValidationReport",
    "ZColorError",
    "ZColoring",
    "brute_force_min",
    "build_torus_matrix",
    "color_set",
    "coloring_matrix",
    "coloring_space",
    "count_colors",
    "determinant",
    "fox_colorable",
    "gen_pretzel",
    "gen_torus",
    "integer_kernel",
    "is_connected",
    "is_z_colorable",
    "link_components",
    "link_determinant",
    "load_coloring",
    "load_diagram",
    "mat_vec",
    "min_colors",
    "normalize",
    "parse",
    "pretzel_twist_chains",
    "save_coloring",
    "save_diagram",
    "serialize",
    "smith_normal_form",
    "torus_arc_grid",
    "torus_coloring",
    "torus_column_states",
    "validate",
    "verify_coloring",
]
