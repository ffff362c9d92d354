"""Exception hierarchy shared by all modules."""


class HirschKitError(Exception):
    """Base class for errors raised by hirschkit."""


class ParseError(HirschKitError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GeometryError(HirschKitError):
    """The input does not describe the kind of polytope an operation needs."""


class InfeasibleError(GeometryError):
    pass


class UnboundedError(GeometryError):
    pass


class LowerDimensionalError(GeometryError):
    def __init__(self, dim, ambient):
        self.dim = dim
        self.ambient = ambient
        super().__init__(
            f"points span an affine space of dimension {dim} in R^{ambient}"
        )


class DisconnectedGraphError(GeometryError):
    def __init__(self, components):
        self.components = components
        shown = "; ".join(
            "{" + ",".join(map(str, sorted(c))) + "}" for c in components
        )
        super().__init__(f"graph is disconnected, components: {shown}")


class BaseNotFacetError(GeometryError):
    pass


class CertificateError(HirschKitError):
    """A spindle or prismatoid claim could not be established."""


class PerturbationError(HirschKitError):
    """The wedge perturbation changed the combinatorics too much."""


class VertexCapExceeded(HirschKitError):
    def __init__(self, predicted, cap, partial=None):
        self.predicted = predicted
        self.cap = cap
        self.partial = partial
        if predicted is None:
            msg = f"vertex cap {cap} reached"
        else:
            msg = f"would produce about {predicted} vertices, cap is {cap}"
        super().__init__(msg)
