"""Word-combinatorial computation in the subregular J-ring of a Coxeter system."""
from .automaton import build_graph, enumerate_box, enumerate_cell, is_box_finite
from .coxeter import (
    INF,
    CoxeterDiagram,
    dihedral_segments,
    glued_product,
    is_subregular,
    load_diagram,
    validate_diagram,
)
from .errors import SubregError
from .fusion import (
    decode_amalg,
    decode_unitary,
    encode_amalg,
    encode_unitary,
    ffr_mul,
    fusion_set_O,
    fusion_set_U,
    fusion_set_Z,
    verlinde_mul,
)
from .hecke import HeckeOracle
from .jring import JElement, anti_involution, mul, segment_product, t, tau, unit_JC
from .structure import PsiMap, classify_fusion, phi_simply_laced, verlinde_identification
from .systems import load_bundled

__version__ = "0.1.0"
