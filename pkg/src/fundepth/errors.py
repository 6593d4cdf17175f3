"""Exception types shared across the package."""


class FunDepthError(Exception):
    """Base class for every error raised by this package."""


class DataFormatError(FunDepthError):
    """Malformed input data: ragged rows, unparseable cells, missing values."""


class GridError(FunDepthError):
    """Invalid evaluation grid, or grids that do not line up across inputs."""


class ParameterError(FunDepthError, ValueError):
    """A parameter is outside its valid range or of the wrong shape."""


class DegenerateSampleError(FunDepthError):
    """The sample has no spread in a direction the computation needs."""


class UndefinedDepthError(FunDepthError):
    """The requested depth value is undefined for these inputs."""


class NumericalError(FunDepthError):
    """A numerical routine failed, e.g. a covariance could not be factored."""
