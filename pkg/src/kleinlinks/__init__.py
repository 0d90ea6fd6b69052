"""kleinlinks: links at infinity of hyperbolic line arrangements.

Exact-rational combinatorics of chord arrangements in the Klein disk,
explicit boundary circles in the 3-sphere, link diagrams, Seifert matrices,
Alexander polynomials and fiberedness verdicts, plus chain-link surfaces and
torus-family framings.
"""

__version__ = "0.1.0"

from .lines import (
    RealLine,
    PairClass,
    Node,
    RealArrangement,
    classify_pair,
    validate_arrangement,
    is_general_position,
    connected_components,
    is_connected,
    is_essentially_affine,
)
from .chords import (
    ChordDiagram,
    chord_diagram,
    chord_diagrams_equivalent,
    labels_interleave,
    chord_separates,
)
from .faces import bounded_faces, face_traversal_bounded_faces, DualGraph, dual_graph
from .perturb import perturb_general
from .rational import GaussianRational
from .complexline import (
    ComplexLine,
    ComplexArrangement,
    complexify,
    complexify_arrangement,
    classify_complex_pair,
    validate_complex_arrangement,
    linking_matrix_combinatorial,
    hopf_arrangement,
)
from .circles import CircleParam, circle_at_infinity
from .divides import Divide, divide_of, acampo_link, tangent_lift
from .projection import (
    Crossing,
    LinkDiagram,
    project_diagram,
    diagram_linking_matrix,
)
from .gauss import linking_number, linking_number_int
from .seifert import (
    SeifertMatrix,
    split_shadow,
    seifert_circles,
    seifert_matrix_from_diagram,
)
from .alexander import LaurentPoly, alexander, fibered_obstructions
from .betti import expected_betti
from .verdict import Verdict, verdict

__all__ = [
    "RealLine",
    "PairClass",
    "Node",
    "RealArrangement",
    "classify_pair",
    "validate_arrangement",
    "is_general_position",
    "connected_components",
    "is_connected",
    "is_essentially_affine",
    "ChordDiagram",
    "chord_diagram",
    "chord_diagrams_equivalent",
    "labels_interleave",
    "chord_separates",
    "bounded_faces",
    "face_traversal_bounded_faces",
    "DualGraph",
    "dual_graph",
    "perturb_general",
    "GaussianRational",
    "ComplexLine",
    "ComplexArrangement",
    "complexify",
    "complexify_arrangement",
    "classify_complex_pair",
    "validate_complex_arrangement",
    "linking_matrix_combinatorial",
    "hopf_arrangement",
    "CircleParam",
    "circle_at_infinity",
    "Divide",
    "divide_of",
    "acampo_link",
    "tangent_lift",
    "Crossing",
    "LinkDiagram",
    "project_diagram",
    "diagram_linking_matrix",
    "linking_number",
    "linking_number_int",
    "SeifertMatrix",
    "split_shadow",
    "seifert_circles",
    "seifert_matrix_from_diagram",
    "LaurentPoly",
    "alexander",
    "fibered_obstructions",
    "expected_betti",
    "Verdict",
    "verdict",
    "__version__",
]
