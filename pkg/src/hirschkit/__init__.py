"""Exact polytope combinatorics for diameter questions.

Rational H/V conversion, vertex and facet graphs, Hirsch audits,
spindles and prismatoids with their length and width, the wedge
operation and the d-step reduction, plus a small simplex-walk lab.
"""

from .errors import (
    BaseNotFacetError,
    CertificateError,
    DisconnectedGraphError,
    GeometryError,
    HirschKitError,
    InfeasibleError,
    LowerDimensionalError,
    ParseError,
    PerturbationError,
    UnboundedError,
    VertexCapExceeded,
)
from .facelat import (
    DiameterRecord,
    Graph,
    RecordStore,
    check_hirsch,
    diameter,
    distance,
    dual_graph,
    h_record_update,
    vertex_graph,
)
from .polytope import Polytope
from .ratgeom import Hyperplane, Inequality, Rational, parse_rational
from .repconv import HRep, IncidenceStructure, VRep, h_to_v, incidence, remove_redundant, v_to_h

__version__ = "0.1.0"
