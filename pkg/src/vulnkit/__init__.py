"""Graph vulnerability parameters through property functions and density thresholds."""

from .graph import Graph, from_graph6, to_graph6
from .params import param_report
from .psi import BIG_OMEGA, OMEGA, GainVariant, psi
from .thresholds import PropertySpec, threshold_by_region

__all__ = ["Graph", "from_graph6", "to_graph6", "param_report", "psi", "OMEGA", "BIG_OMEGA",
           "GainVariant", "PropertySpec", "threshold_by_region"]
__version__ = "0.1.0"
