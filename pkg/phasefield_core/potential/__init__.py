"""
Double-well potentials.

The potential W, its derivatives, the surface tension σ and the standing-wave
profile q₀ solving q₀″ = W′(q₀) with q₀(±∞) = ±1.
"""
from ._wave import StandingWave, standing_wave
from ._well import DoubleWell, QuarticWell, ScaledWell, TabulatedWell, eval_well, sigma

__all__ = [
    "DoubleWell",
    "QuarticWell",
    "ScaledWell",
    "StandingWave",
    "TabulatedWell",
    "eval_well",
    "sigma",
    "standing_wave",
]
