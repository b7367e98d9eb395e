from .advanced import reduce_advanced
from .critical import reduce_critical, reduce_max_critical
from .simple import ReductionError, reduce_simple

__all__ = ["ReductionError", "reduce_advanced", "reduce_critical", "reduce_max_critical", "reduce_simple"]
