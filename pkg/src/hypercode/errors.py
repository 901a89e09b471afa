"""Exception hierarchy shared across the package."""


class HypercodeError(Exception):
    """Base class for all domain errors."""


class ParseError(HypercodeError):
    """Malformed input data (bad cell, bad JSON field, ...)."""


class DimensionError(HypercodeError):
    """Ragged matrix or out-of-range neuron index."""


class ConfigError(HypercodeError):
    """Invalid build / nerve / synth configuration."""


class BondLookupError(HypercodeError):
    """Unknown bond id or level in a hyperstructure query."""


class LevelRangeError(HypercodeError):
    """Level index outside the populated range."""


class CompositionError(HypercodeError):
    """Requested bond composition is not gluable."""


class CliqueBudgetError(HypercodeError):
    """Maximal-clique enumeration exceeded its budget."""


class DimCapError(HypercodeError):
    """Requested homology dimension exceeds the face-enumeration cap."""


class FiltrationError(HypercodeError):
    """Non-monotone or incomplete filtration."""


class UniverseError(HypercodeError):
    """Two structures do not share the same neuron universe."""
