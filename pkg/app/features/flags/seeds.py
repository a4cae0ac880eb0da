"""
Translation seeds.

Each closed-form tilting flag comes with a construction: a tilting module
T_seed with known flag and a finite-dimensional module V such that
pr_b(T_seed (x) V) is T_f, or T_f plus the wall tiltings listed in
``tables.TRANSLATION_SPLITS``. The documented seeds are listed here; every
other weight falls back to the default seed f - 2delta with the adjoint
module.
"""

from typing import NamedTuple, Optional

from app.features.flags.schema import Regime
from app.features.rootdata.service import adjoint_weights, l121_weights, quasinatural_weights
from app.features.weights.schema import Parameter, Weight
from app.features.weights.service import atypical_index, mirror, mirror_parameter

Triple = tuple[int, int, int]

TWO_DELTA: Triple = (2, 0, 0)


class TranslationModule(NamedTuple):
    """Finite-dimensional module given by its weights with multiplicity."""

    name: str
    weights: tuple[Triple, ...]

    def mirrored(self) -> "TranslationModule":
        return TranslationModule(f"mirror({self.name})", tuple(sorted((a, c, b) for a, b, c in self.weights)))


ADJOINT = TranslationModule("adjoint", tuple(adjoint_weights()))
L121 = TranslationModule("L121", tuple(l121_weights()))


def quasinatural(p: int) -> TranslationModule:
    return TranslationModule(f"quasinatural({p})", tuple(quasinatural_weights(p)))


def translation_modules(param: Parameter) -> list[TranslationModule]:
    """Modules admissible for constructions at this parameter."""
    modules = [ADJOINT]
    if param.is_generic:
        modules.append(L121)
        return modules
    if param.d == 1:
        modules.append(quasinatural(param.p))
    if param.p == 1:
        modules.append(quasinatural(param.d).mirrored())
    return modules


def _shifted(f: Weight, gamma: Triple) -> Weight:
    return Weight(f.x - gamma[0], f.y - gamma[1], f.z - gamma[2])


def _pm1_seed(f: Weight) -> Weight:
    s2 = 1 if f.y > 0 else -1
    s3 = 1 if f.z > 0 else -1
    return _shifted(f, (1, -s2, -s3))


def documented_seed(param: Parameter, f: Weight, regime: Regime) -> Optional[tuple[Weight, TranslationModule]]:
    """
    Seed and module used by the construction of T_f, if one is documented.

    Args:
        param: Parameter zeta
        f: Atypical rho-shifted weight
        regime: Regime of f

    Returns:
        tuple: (seed weight, module), or None for typical weights
    """
    if regime is Regime.TYPICAL:
        return None
    if regime is Regime.MIRROR:
        mirrored_param = mirror_parameter(param)
        seed, module = documented_seed(mirrored_param, mirror(f), Regime.KD1)
        return mirror(seed), module.mirrored()

    index = atypical_index(param, f)
    m, signs = index.n, index.signs

    if regime is Regime.GENERIC_B0:
        if m == 0:
            return Weight(-2, 0, 0), ADJOINT
        if m == 1 and signs == "+--" and param.is_generic:
            return Weight(-1, -2, -1), L121
        special = {"+-+": Weight(0, -2, 0), "++-": Weight(0, 0, -2), "+++": Weight(2, 0, 0)}
        if m == 1 and signs in special:
            return special[signs], ADJOINT
        return _shifted(f, TWO_DELTA), ADJOINT

    kp = index.k * param.p
    kd = index.k * param.d
    if regime in (Regime.KD1, Regime.P1D1) and m == 1 and signs in ("+-o", "++o"):
        return Weight(0, -2 if signs == "+-o" else 2, 0), quasinatural(param.p)
    if regime is Regime.P1D1 and m == -1 and signs in ("+o-", "+o+"):
        return Weight(0, 0, -2 if signs == "+o-" else 2), quasinatural(1).mirrored()
    pm1 = m == -1 or (m == 1 and regime is Regime.RATIONAL)
    if regime is not Regime.P1D1 and signs[0] == "+" and pm1:
        return _pm1_seed(f), ADJOINT
    if m == 1 - kp and signs == "-++":
        return Weight(-1 - kp, 1, kp + kd - 1), ADJOINT
    return _shifted(f, TWO_DELTA), ADJOINT


def fallback_seeds(param: Parameter, f: Weight) -> list[tuple[Weight, TranslationModule]]:
    """Seeds f - gamma for every weight gamma of every admissible module."""
    seeds = []
    for module in translation_modules(param):
        for gamma in sorted(set(module.weights)):
            seeds.append((_shifted(f, gamma), module))
    return seeds
