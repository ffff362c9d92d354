"""Spindles, prismatoids, the wedge operation and the d-step reduction."""

from .certs import (
    PrismatoidCert,
    SpindleCert,
    apex_pairs,
    as_prismatoid,
    as_spindle,
    base_pairs,
    covers_all_facets,
    covers_all_vertices,
    dual_prismatoid,
    find_prismatoid_bases,
    find_spindle_apexes,
    length_path,
    polar_dual,
    prismatoid_width,
    spindle_length,
    width_path,
)
from .generate import gen_spindle, random_prismatoid
from .prismatoid import SectionReport, build_prismatoid, check_section_lemma, minkowski_sum
from .verify import VerifyReport, verify_candidate
from .wedge import (
    DEFAULT_EPS,
    DEFAULT_VERTEX_CAP,
    ReducePlan,
    ReduceResult,
    WedgeResult,
    dstep_reduce_execute,
    dstep_reduce_plan,
    wedge,
    wedge_facet_candidates,
)
