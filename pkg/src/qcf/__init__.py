"""Exact q-series, continued fractions and a verifiable catalog of q-continued-fraction identities."""

from .cfrac import CFrac, convergents, eval_numeric, limit_series
from .qseries import QSeries, qpochhammer, qbinomial_coeff

__version__ = "0.1.0"

__all__ = ["CFrac", "QSeries", "convergents", "eval_numeric", "limit_series", "qbinomial_coeff", "qpochhammer"]
