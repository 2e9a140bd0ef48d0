"""Shared fixtures and the frozen regression constants.

The three Fraction literals below were computed once from the fixed corpora
(scripts/refresh_frozen_constants.py reprints them) and are asserted as hard
bounds thereafter.  Do not relax them to make a failing run pass; a crossing
means either the corpora or the arithmetic changed.
"""

from fractions import Fraction

# worst observed I_w / rhs over st_ratio_corpus, attained by grid(7)
ST_RATIO_MAX = Fraction("2488/6321")

# smallest observed |AB+C| / sqrt(|A||B||C|) over abc_ratio_corpus, at ap(4)^3
ABC_RATIO_MIN = Fraction("13/8")

# smallest |D^2+D^2| / |D|^(11/10) over ap(3)..ap(64), attained at ap(3)
THM1_AP_RATIO_MIN = Fraction("6250000/6117807")
