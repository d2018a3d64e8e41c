"""Exact twist-and-rotate models of the Arnoux-Yoccoz mapping classes."""

__version__ = "0.1.0"

from .ayfamily import FamilyInstance, nonorientable_instance, orientable_lift
from .curveweb import CurveSystem, SurfaceClass
from .penner import Sym, Twist, TwistWord, penner_check, pf_analysis, word_action
from .strips import IntervalExchange, StripModel, ay_strip, first_return

__all__ = [
    "CurveSystem",
    "FamilyInstance",
    "IntervalExchange",
    "StripModel",
    "SurfaceClass",
    "Sym",
    "Twist",
    "TwistWord",
    "ay_strip",
    "first_return",
    "nonorientable_instance",
    "orientable_lift",
    "penner_check",
    "pf_analysis",
    "word_action",
]
