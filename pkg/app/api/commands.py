"""
Command Handlers

One handler per CLI command. Handlers parse their arguments, delegate to
the feature services and return (exit code, payload, text renderer); they
never write to the streams themselves.
"""

from argparse import Namespace
from typing import Any, Callable, Optional

from app.core.exceptions import UsageException
from app.core.settings import settings
from app.features.characters.schema import TruncatedCharacter, VermaFlag
from app.features.characters.service import verma_character
from app.features.flags.schema import ModuleLabel
from app.features.flags.service import composition, projective_flag, regime_of, simple_character, tilting_flag
from app.features.rootdata.repo import dump_table
from app.features.rootdata.service import get_structure_table
from app.features.verify.schema import VerifyRequest
from app.features.verify.service import run_request
from app.features.weights.schema import Parameter, Weight
from app.features.weights.service import (
    atypical_index,
    casimir,
    classify_block,
    enumerate_block,
    height,
    is_atypical,
    rho_unshift,
)

CommandResult = tuple[int, Any, Optional[Callable[[Any], str]]]


def _param(args: Namespace) -> Parameter:
    return Parameter.parse(args.zeta or settings.default_zeta)


def _weight(args: Namespace) -> Weight:
    if not args.weight:
        raise UsageException("--weight x,y,z is required")
    return Weight.parse(args.weight)


def _flag_text(kind: str) -> Callable[[dict], str]:
    def render(payload: dict) -> str:
        if not payload:
            return "(empty)"
        weights = sorted(
            (Weight.parse(key) for key in payload),
            key=lambda w: (-height(rho_unshift(w)), tuple(w)),
        )
        return "\n".join(f"{payload[w.render()]} {ModuleLabel(kind=kind, weight=w).render()}" for w in weights)

    return render


def _character_text(payload: list[dict]) -> str:
    if not payload:
        return "(empty)"
    return "\n".join(f"{','.join(map(str, item['weight']))}: {item['coefficient']}" for item in payload)


def _mapping_text(payload: dict) -> str:
    return "\n".join(f"{key}: {value}" for key, value in payload.items())


def classify(args: Namespace) -> CommandResult:
    """Block, atypical coordinates, regime and Casimir value of a weight."""
    param = _param(args)
    f = _weight(args)
    field = param.field()
    atypical = is_atypical(param, f)
    block = classify_block(param, f)

    payload = {
        "weight": f.render(),
        "zeta": str(param),
        "atypical": atypical,
        "block": f"B_{block.k}" if block.kind == "atypical" else f"typical{block.orbit}",
        "index": atypical_index(param, f).model_dump() if atypical else None,
        "regime": regime_of(param, f).value,
        "casimir": field.render(casimir(param, rho_unshift(f))),
    }
    return 0, payload, _mapping_text


def flag(args: Namespace) -> CommandResult:
    """Verma flag of T_f or P_f."""
    param = _param(args)
    f = _weight(args)
    result: VermaFlag = tilting_flag(param, f) if args.kind == "tilting" else projective_flag(param, f)
    return 0, result.payload(), _flag_text("verma")


def comp(args: Namespace) -> CommandResult:
    """Composition factors of M_f."""
    param = _param(args)
    f = _weight(args)
    return 0, composition(param, f, args.method).payload(), _flag_text("simple")


def char(args: Namespace) -> CommandResult:
    """Truncated character of M_f or L_f."""
    param = _param(args)
    f = _weight(args)
    max_height = settings.char_height if args.height is None else args.height
    if max_height < 0:
        raise UsageException("--height must be nonnegative")
    if args.kind == "verma":
        result: TruncatedCharacter = verma_character(f, max_height)
    else:
        result = simple_character(param, f, max_height)
    return 0, result.payload(), _character_text


def blocks(args: Namespace) -> CommandResult:
    """Weights of WT_k within the index range."""
    param = _param(args)
    if param.is_generic and args.k != 0:
        raise UsageException("generic zeta has only the atypical block B_0")
    if args.k < 0:
        raise UsageException("--k must be a natural number")
    index_range = settings.verify_range if args.range is None else args.range

    payload = []
    for f in enumerate_block(param, args.k, index_range):
        index = atypical_index(param, f)
        payload.append({"weight": f.render(), "n": index.n, "signs": index.signs})

    def render(items: list[dict]) -> str:
        return "\n".join(f"{item['weight']}  n={item['n']} {item['signs']}" for item in items) or "(empty)"

    return 0, payload, render


def table(args: Namespace) -> CommandResult:
    """Bracket table dump."""
    param = _param(args)
    return 0, dump_table(get_structure_table(param.field())), None


def verify(args: Namespace) -> CommandResult:
    """Run a verification suite; exit 1 when any check fails."""
    request = VerifyRequest(
        suite=args.suite,
        zeta=args.zeta,
        k=args.k,
        regime=args.regime,
        index_range=settings.verify_range if args.range is None else args.range,
        max_n=settings.max_singular_n if args.max_n is None else args.max_n,
        height=settings.char_height if args.height is None else args.height,
        seed=settings.seed if args.seed is None else args.seed,
        workers=settings.workers if args.workers is None else args.workers,
    )
    report = run_request(request)

    def render(payload: dict) -> str:
        lines = [f"{payload['suite']}: {payload['passed']}/{payload['total']} passed, {payload['failed']} failed"]
        lines += [f"  FAIL {item['weight']}: {item['detail']}" for item in payload["failures"]]
        lines += [f"  note: {note}" for note in payload["notes"]]
        return "\n".join(lines)

    return (1 if report.failed else 0), report.model_dump(), render


COMMANDS: dict[str, Callable[[Namespace], CommandResult]] = {
    "classify": classify,
    "flag": flag,
    "comp": comp,
    "char": char,
    "blocks": blocks,
    "table": table,
    "verify": verify,
}
