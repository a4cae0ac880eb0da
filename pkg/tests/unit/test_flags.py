import pytest

from app.features.characters.schema import VermaFlag
from app.features.characters.service import translation_construct, verma_character
from app.features.flags import service as flags_service
from app.features.flags.schema import Regime
from app.features.flags.seeds import L121, documented_seed, translation_modules
from app.features.flags.service import (
    composition_factors,
    composition_factors_scan,
    decompose_into_tiltings,
    is_projective_tilting,
    projective_flag,
    regime_of,
    simple_character,
    tilting_flag,
    translation_split,
)
from app.features.flags.sweep import flag_verification_sweep, sweep_weight
from app.features.flags.tables import parse_terms, resolve_index
from app.features.verify.service import REGIME_TARGETS
from app.features.weights.schema import BlockId, Parameter, Weight
from app.features.weights.service import decode, enumerate_block, mirror

KD1 = Parameter.rational(2, 1)
P1D1 = Parameter.rational(1, 1)
MIRROR = Parameter.rational(1, 2)


def wall_weights(param: Parameter, k: int) -> list[Weight]:
    """Weights of B_k with a zero coordinate."""
    index_range = 0 if param.is_generic else k * (param.p + param.d)
    return [f for f in enumerate_block(param, k, index_range) if 0 in tuple(f)]


WALL_CASES = [
    pytest.param(Parameter.parse(zeta), k, f, id=f"{zeta}-k{k}-{f.render()}")
    for zeta, k in REGIME_TARGETS["all"]
    for f in wall_weights(Parameter.parse(zeta), k)
]


class TestTableDsl:
    def test_resolve_index(self):
        env = {"m": 4, "s": 1, "kp": 3, "kd": 2}
        assert resolve_index("-1-kp", env) == -4
        assert resolve_index("m+s", env) == 5
        assert resolve_index("kd-1", env) == 1

    def test_malformed_index(self):
        with pytest.raises(ValueError):
            resolve_index("m*2", {"m": 1, "s": 1, "kp": 0, "kd": 0})

    def test_parse_terms_expands_stars_and_doubles(self):
        assert parse_terms("0:ooo x2 + 1:-*+") == ((2, "0", "ooo"), (1, "1", "-++"), (1, "1", "--+"))


class TestRegimes:
    def test_dispatch(self, generic, three_halves):
        assert regime_of(generic, Weight(1, 1, 0)) is Regime.TYPICAL
        assert regime_of(generic, Weight(2, -2, 2)) is Regime.GENERIC_B0
        assert regime_of(three_halves, Weight(0, 0, 0)) is Regime.GENERIC_B0
        assert regime_of(three_halves, Weight(2, 5, 0)) is Regime.RATIONAL
        assert regime_of(KD1, Weight(1, 3, 0)) is Regime.KD1
        assert regime_of(KD1, decode(KD1, 2, 0, "o++")) is Regime.RATIONAL
        assert regime_of(P1D1, decode(P1D1, 1, 0, "o++")) is Regime.P1D1
        assert regime_of(MIRROR, Weight(1, 0, 3)) is Regime.MIRROR


class TestTiltingFlags:
    def test_antidominant_family(self, generic):
        assert tilting_flag(generic, Weight(-2, -2, -2)) == VermaFlag.of([(-2, -2, -2), (-3, -3, -3)])

    def test_extra_multiplicity(self, generic):
        assert tilting_flag(generic, Weight(1, -1, -1)) == VermaFlag.of(
            {(1, -1, -1): 1, (0, 0, 0): 1, (-1, 1, -1): 1, (-1, -1, 1): 1, (-1, -1, -1): 2, (-2, -2, -2): 1}
        )

    def test_kd1_family(self):
        assert tilting_flag(KD1, Weight(1, 3, 0)) == VermaFlag.of(
            [(1, 3, 0), (1, -3, 0), (0, 2, 1), (0, 2, -1), (0, -2, 1), (0, -2, -1), (-1, 3, 0), (-1, -3, 0)]
        )

    def test_flag_lengths(self, three_halves):
        f = decode(three_halves, 1, -4, "+++")
        assert f == Weight(4, 1, 6)
        assert tilting_flag(three_halves, f).length == 12
        assert tilting_flag(three_halves, decode(three_halves, 1, 5, "+++")).length == 16

    def test_next_to_wall_row(self, three_halves):
        assert tilting_flag(three_halves, Weight(4, 1, 6)) == VermaFlag.of(
            [(4, 1, 6), (4, 1, -6), (4, -1, 6), (4, -1, -6), (3, 0, 5), (-3, 0, 5),
             (-4, 1, 6), (-4, 1, -6), (-4, -1, 6), (-4, -1, -6), (3, 0, -5), (-3, 0, -5)]
        )

    def test_mirror_regime(self):
        f = Weight(1, 3, 0)
        assert tilting_flag(MIRROR, mirror(f)) == tilting_flag(KD1, f).mirrored()

    def test_typical(self, generic):
        assert tilting_flag(generic, Weight(0, -2, 0)) == VermaFlag.of([(0, -2, 0)])

    @pytest.mark.parametrize("param", [Parameter.generic(), Parameter.rational(3, 2), KD1, P1D1])
    def test_shape(self, param):
        k = 0 if param.is_generic else 1
        for n in range(-3, 4):
            if k == 0 and n < 0:
                continue
            f = decode(param, k, n, "+++")
            flag = tilting_flag(param, f)
            assert flag.multiplicity(f) == 1
            assert all(m in (1, 2) for _, m in flag)


class TestProjectiveFlags:
    def test_zero_weight(self, generic):
        assert projective_flag(generic, Weight(0, 0, 0)) == VermaFlag.of(
            [(0, 0, 0), (1, -1, -1), (1, -1, 1), (1, 1, -1), (1, 1, 1)]
        )

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_dominant_family(self, generic, n):
        assert projective_flag(generic, Weight(n, n, n)) == VermaFlag.of([(n, n, n), (n + 1, n + 1, n + 1)])


class TestComposition:
    def test_zero_weight(self, generic):
        assert composition_factors(generic, Weight(0, 0, 0)) == VermaFlag.of(
            {(0, 0, 0): 1, (-1, 1, 1): 1, (-1, 1, -1): 1, (-1, -1, 1): 1, (-1, -1, -1): 2}
        )

    def test_adjoint_head(self, generic):
        assert composition_factors(generic, Weight(1, 1, 1)).multiplicity((-1, 1, 1)) == 2

    def test_index_two_extra_factor(self, generic):
        factors = composition_factors(generic, Weight(2, 2, 2))
        assert factors.multiplicity((-1, 1, 1)) == 1
        assert factors.multiplicity((-1, 1, -1)) == 0

    @pytest.mark.parametrize("f", [Weight(0, 0, 0), Weight(1, 1, 1), Weight(1, -1, 1), Weight(-2, -2, -2)])
    def test_reciprocity_scan_agrees(self, generic, f):
        assert composition_factors_scan(generic, f) == composition_factors(generic, f)

    @pytest.mark.parametrize(
        "n,signs", [(2, "++o"), (-4, "++-"), (-2, "-++"), (1, "--+"), (-3, "-o+"), (0, "o+-")]
    )
    def test_reciprocity_scan_rational(self, three_halves, n, signs):
        f = decode(three_halves, 1, n, signs)
        assert composition_factors_scan(three_halves, f) == composition_factors(three_halves, f)

    @pytest.mark.parametrize("signs", ["o--", "o-+", "o+-", "o++"])
    def test_reciprocity_scan_zeta_one(self, signs):
        f = decode(P1D1, 1, 0, signs)
        assert composition_factors_scan(P1D1, f) == composition_factors(P1D1, f)

    def test_wall_factors_are_simple(self, three_halves):
        f = decode(three_halves, 1, -3, "+o+")
        assert all(m == 1 for _, m in composition_factors(three_halves, f))


class TestSimpleCharacters:
    def test_adjoint_zero_weight(self, generic):
        assert simple_character(generic, Weight(1, 1, 1), 8).coefficient((0, 0, 0)) == 3

    def test_simple_verma(self, generic):
        f = Weight(-1, -2, -3)
        assert simple_character(generic, f, 6) == verma_character(f, 6)

    def test_nonnegative(self, generic):
        character = simple_character(generic, Weight(2, 2, 2), 8)
        assert all(c > 0 for _, c in character.coefficients)

    def test_wall_weight_of_b1(self, three_halves):
        character = simple_character(three_halves, Weight(-3, 0, 5), 2)
        assert character.as_dict() == {
            (-2, -1, 4): 1,
            (-2, -3, 4): 1,
            (-2, -1, 2): 1,
            (-3, -2, 5): 1,
            (-3, 0, 3): 1,
            (-2, -5, 4): 1,
            (-2, -3, 2): 1,
            (-2, -1, 0): 1,
        }

    def test_wall_weight_multiplicity(self, three_halves):
        character = simple_character(three_halves, Weight(-3, 0, -5), 3)
        assert character.coefficient((-3, -2, -5)) == 2
        assert character.coefficient((-3, -2, -7)) == 3
        assert character.coefficient((-3, -4, -5)) == 2

    @pytest.mark.parametrize("param,k,f", WALL_CASES)
    def test_nonnegative_at_walls(self, param, k, f):
        character = simple_character(param, f, 4)
        assert character.coefficient(character.anchor) == 1
        assert all(c > 0 for _, c in character.coefficients)


class TestProjectiveTilting:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_dominant_family(self, generic, n):
        assert is_projective_tilting(generic, Weight(n, n, n)) == Weight(-n, -n, -n)

    def test_not_projective(self, generic):
        assert is_projective_tilting(generic, Weight(1, -1, -1)) is None

    def test_rational_pair(self, three_halves):
        f = decode(three_halves, 1, 2, "++o")
        assert is_projective_tilting(three_halves, f) == -f

    def test_next_to_wall_pair(self, three_halves):
        assert is_projective_tilting(three_halves, Weight(4, 1, 6)) == Weight(-4, -1, -6)
        assert is_projective_tilting(three_halves, Weight(4, 1, -6)) is None

    def test_typical(self, generic):
        assert is_projective_tilting(generic, Weight(0, -2, 0)) is None

    @pytest.mark.parametrize("param", [Parameter.rational(3, 2), KD1, P1D1], ids=["3/2", "2/1", "1/1"])
    def test_regular_pair(self, param):
        f = decode(param, 1, 3, "+++")
        assert is_projective_tilting(param, f) == -f

    def test_searches_every_flag_member(self, three_halves, mocker):
        f = Weight(4, 1, -6)
        flag = tilting_flag(three_halves, f)
        member = Weight(3, 0, -5)
        mocker.patch.object(
            flags_service,
            "projective_flag",
            side_effect=lambda param, g: flag if g == member else VermaFlag.of({}),
        )
        assert is_projective_tilting(three_halves, f) == member


class TestDecomposition:
    def test_l121_translation_splits(self, generic):
        seed, module = documented_seed(generic, Weight(1, -1, -1), Regime.GENERIC_B0)
        assert (seed, module) == (Weight(-1, -2, -1), L121)
        constructed = translation_construct(
            generic, tilting_flag(generic, seed), list(module.weights), BlockId.atypical(0)
        )
        assert decompose_into_tiltings(generic, constructed) == VermaFlag.of([(1, -1, -1), (-1, -1, -1)])

    def test_non_flag_fails(self, generic):
        assert decompose_into_tiltings(generic, VermaFlag.of([(-2, -2, -2)])) is None


class TestSweep:
    def test_translation_modules(self, generic):
        assert [m.name for m in translation_modules(generic)] == ["adjoint", "L121"]
        assert [m.name for m in translation_modules(KD1)] == ["adjoint", "quasinatural(2)"]
        assert [m.name for m in translation_modules(MIRROR)] == ["adjoint", "mirror(quasinatural(2))"]
        assert [m.name for m in translation_modules(P1D1)] == [
            "adjoint",
            "quasinatural(1)",
            "mirror(quasinatural(1))",
        ]

    def test_documented_kd1_seed(self):
        entry = sweep_weight(KD1, Weight(1, 3, 0))
        assert entry.passed
        assert entry.seed == (0, 2, 0)

    def test_generic_sweep(self, generic):
        report = flag_verification_sweep(generic, 0, 2)
        assert report.total == 1 + 8 + 8
        assert report.failed == 0

    def test_zeta_one_quasinatural_seed(self):
        entry = sweep_weight(P1D1, Weight(1, -2, 0))
        assert entry.passed
        assert (entry.seed, entry.module, entry.seed_source) == ((0, -2, 0), "quasinatural(1)", "documented")
        assert entry.computed == {"1,-2,0": 1}

    def test_zeta_one_mirrored_seed(self):
        f = decode(P1D1, 1, -1, "+o-")
        assert f == Weight(1, 0, -2)
        entry = sweep_weight(P1D1, f)
        assert entry.passed
        assert (entry.seed, entry.module) == ((0, 0, -2), "mirror(quasinatural(1))")
        assert entry.computed == {"1,0,-2": 1}

    def test_split_is_part_of_the_target(self, three_halves):
        entry = sweep_weight(three_halves, Weight(4, 1, 6))
        assert entry.passed
        assert entry.seed_source == "documented"
        assert entry.computed == {"4,1,6": 1, "3,0,5": 1}

    def test_extra_summand_fails(self, three_halves, mocker):
        mocker.patch("app.features.flags.sweep.translation_split", return_value=VermaFlag.of({}))
        mocker.patch("app.features.flags.sweep.fallback_seeds", return_value=[])
        entry = sweep_weight(three_halves, Weight(4, 1, 6))
        assert not entry.passed
        assert entry.detail == "no seed translates to T_f"

    @pytest.mark.parametrize(
        "zeta,k,index_range",
        [("1/1", 1, 3), ("1/1", 0, 3), ("3/2", 1, 4), ("3/2", 0, 2), ("2/1", 1, 3), ("1/2", 1, 3)],
    )
    def test_exact_sweep(self, zeta, k, index_range):
        report = flag_verification_sweep(Parameter.parse(zeta), k, index_range)
        assert report.failed == 0
        assert all(entry.passed for entry in report.entries)


class TestTranslationSplits:
    def test_empty_off_the_walls(self, three_halves):
        assert translation_split(three_halves, decode(three_halves, 1, 5, "+++")) == VermaFlag.of({})
        assert translation_split(three_halves, Weight(0, -2, 0)) == VermaFlag.of({})

    def test_next_to_wall(self, three_halves):
        assert translation_split(three_halves, Weight(4, 1, 6)) == VermaFlag.of([(3, 0, 5)])

    def test_kd1_wall(self):
        assert translation_split(KD1, decode(KD1, 1, 0, "o++")) == VermaFlag.of([(-1, 3, 0)])

    def test_mirror(self):
        f = decode(KD1, 1, 0, "o++")
        assert translation_split(MIRROR, mirror(f)) == translation_split(KD1, f).mirrored()

    def test_principal_block(self, generic, three_halves):
        assert translation_split(generic, Weight(1, -1, -1)) == VermaFlag.of([(-1, -1, -1)])
        assert translation_split(three_halves, Weight(1, -1, -1)) == VermaFlag.of(
            {(-1, -1, -1): 2, (-2, -2, -2): 1}
        )
