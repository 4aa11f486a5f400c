"""Exception hierarchy.

Every domain error carries a stable machine-readable ``code`` so the CLI
can emit structured error objects without string matching.
"""

from __future__ import annotations


class DelzantError(ValueError):
    """Base class for all domain errors raised by this package."""

    code = "domain_error"


class DegenerateDirectionError(DelzantError):
    """The zero vector has no primitive representative."""

    code = "degenerate_direction"


class NotUnimodularError(DelzantError):
    """Linear part of an affine lattice map must have determinant +1 or -1."""

    code = "not_unimodular"


class TooFewVerticesError(DelzantError):
    code = "too_few_vertices"


class RepeatedVertexError(DelzantError):
    code = "repeated_vertex"

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"repeated vertex at index {index}")


class CollinearVerticesError(DelzantError):
    code = "collinear_vertices"

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"collinear vertices at index {index}")


class NonConvexError(DelzantError):
    code = "non_convex"

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"non-convex corner at index {index}")


class NotDelzantError(DelzantError):
    code = "not_delzant"


class EdgeCountError(DelzantError):
    code = "edge_count"


class InvalidParamsError(DelzantError):
    code = "invalid_params"


class NonPrimitiveDirectionError(DelzantError):
    code = "non_primitive_direction"


class GraphError(DelzantError):
    code = "invalid_graph"


class InteriorFixedSurfaceError(GraphError):
    code = "interior_fixed_surface"


class FormatError(DelzantError):
    """Malformed JSON payloads, rationals, or other serialized input."""

    code = "bad_format"
