"""
Flag verification sweep.

Rebuilds each tilting flag with a translation functor: the flag of
pr_b(T_seed (x) V) is split into tilting flags, and the weight passes when
the split is exactly T_f, plus the wall tiltings recorded for its
documented seed. A split that fails means the tables disagree with the
construction and fails the weight outright.
"""

from typing import Optional

from app.core.logging import get_logger
from app.features.characters.schema import VermaFlag
from app.features.characters.service import translation_construct
from app.features.flags.schema import Regime, SweepEntry, SweepReport
from app.features.flags.seeds import TranslationModule, documented_seed, fallback_seeds
from app.features.flags.service import decompose_into_tiltings, regime_of, tilting_flag, translation_split
from app.features.weights.schema import Parameter, Weight
from app.features.weights.service import classify_block, enumerate_block

logger = get_logger(__name__)


def reconstruct(
    param: Parameter, f: Weight, seed: Weight, module: TranslationModule, split: VermaFlag
) -> tuple[Optional[bool], dict]:
    """
    Translate T_seed by module into the block of f and split the result.

    Returns:
        tuple: (True if the summands are T_f plus split, False if not, None
        if the split fails; the tilting summands as a payload)
    """
    constructed = translation_construct(
        param, tilting_flag(param, seed), list(module.weights), classify_block(param, f)
    )
    summands = decompose_into_tiltings(param, constructed)
    if summands is None:
        return None, constructed.payload()
    return summands == VermaFlag.of({f: 1}).plus(split), summands.payload()


def sweep_weight(param: Parameter, f: Weight) -> SweepEntry:
    """Try the documented seed of f, then every fallback seed."""
    f = Weight(*f)
    regime = regime_of(param, f)
    expected = tilting_flag(param, f).payload()
    no_split = VermaFlag.of({})

    candidates = []
    documented = documented_seed(param, f, regime)
    if documented is not None:
        candidates.append((documented, "documented", translation_split(param, f)))
    candidates.extend((pair, "fallback", no_split) for pair in fallback_seeds(param, f) if pair != documented)

    for (seed, module), source, split in candidates:
        exact, computed = reconstruct(param, f, seed, module, split)
        if exact is None:
            return SweepEntry(
                weight=tuple(f),
                passed=False,
                seed=tuple(seed),
                module=module.name,
                seed_source=source,
                expected=expected,
                computed=computed,
                detail=f"translated flag of T({seed.render()}) by {module.name} is not a sum of tilting flags",
            )
        if exact:
            return SweepEntry(
                weight=tuple(f),
                passed=True,
                seed=tuple(seed),
                module=module.name,
                seed_source=source,
                expected=expected,
                computed=computed,
            )

    return SweepEntry(
        weight=tuple(f),
        passed=False,
        expected=expected,
        detail="no seed translates to T_f",
    )


def flag_verification_sweep(param: Parameter, k: int, index_range: int) -> SweepReport:
    """
    Sweep every weight of WT_k with |index| <= index_range.

    Args:
        param: Parameter zeta
        k: Block index (0 for the principal block)
        index_range: Bound on the absolute index

    Returns:
        SweepReport: One entry per weight
    """
    weights = enumerate_block(param, k, index_range)
    entries = [sweep_weight(param, f) for f in weights]
    passed = sum(1 for e in entries if e.passed)
    regime = regime_of(param, weights[0]) if weights else Regime.GENERIC_B0

    report = SweepReport(
        zeta=str(param),
        k=k,
        regime=regime,
        total=len(entries),
        passed=passed,
        failed=len(entries) - passed,
        documented_hits=sum(1 for e in entries if e.passed and e.seed_source == "documented"),
        entries=entries,
    )
    logger.debug(f"Sweep zeta={param} k={k}: {report.passed}/{report.total} weights reconstructed")
    return report
