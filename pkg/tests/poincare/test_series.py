"""Test series expansion, the enumeration-based series and their comparison."""

import itertools

import pytest

from poincareseries.core import LexVal, QuadVal, RationalVal
from poincareseries.dualgraph import ValuationType
from poincareseries.errors import BadBound, BoundMismatch, MissingNextBetaBound
from poincareseries.poincare import (
    Geom,
    Pair,
    SeriesTruncation,
    diff_series,
    expand_factors,
    series_factors,
    series_from_enumeration,
    series_from_formula,
)
from poincareseries.semigroup import Box, Scalar, ValuationSpec, validate_spec
from tests.corpus import random_corpus


def _r(n, d=1):
    return RationalVal(n, d)


@pytest.fixture
def t41():
    return validate_spec({"type": "4.1", "g": 1, "betas": ["2", "3"], "qs": [2]})


class TestExpandFactors:
    """Exact products of Geom and Pair factors."""

    def test_geom_times_pair(self):
        """1/(1-t^2) * (1+t^3) covers every value but 1."""
        series = expand_factors([Geom(_r(2)), Pair(2, _r(3))], Scalar(_r(12)))
        assert series.values() == [_r(v) for v in [0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]]
        assert series.all_ones()
        assert series.coefficient(_r(1)) == 0

    def test_two_geometric_factors_count_lattice_points(self):
        """Coefficients count the ways to write s as 2i + 3j."""
        series = expand_factors([Geom(_r(2)), Geom(_r(3))], Scalar(_r(12)))
        assert series.coefficient(_r(6)) == 2
        assert series.coefficient(_r(12)) == 3

    def test_empty_product_is_one(self):
        """An empty product is the constant 1."""
        series = expand_factors([], Scalar(_r(5)))
        assert series.terms == ((_r(0), 1),)

    def test_divisorial_lattice_count(self):
        """Type 0 with an empty middle product counts solutions of 2i + 3j = s."""
        spec = validate_spec({"type": "0", "g": 1, "betas": ["2", "3"], "qs": [2]})
        series = series_from_formula(spec, Scalar(_r(30)))
        for s in range(31):
            expected = sum(1 for i in range(16) for j in range(11) if 2 * i + 3 * j == s)
            assert series.coefficient(_r(s)) == expected

    def test_factor_order_does_not_matter(self):
        """Every permutation of the factors expands to the same series."""
        factors = [Geom(_r(3)), Pair(3, _r(4)), Pair(2, _r(5, 2)), Geom(_r(7))]
        reference = expand_factors(factors, Scalar(_r(25)))
        for perm in itertools.permutations(factors):
            assert expand_factors(list(perm), Scalar(_r(25))).terms == reference.terms

    def test_box_needs_lex_exponents(self):
        """A box bound only truncates Z^2 exponents."""
        with pytest.raises(BadBound):
            expand_factors([Geom(_r(2))], Box(3, 3))

    def test_nonpositive_bound(self):
        """A zero bound is refused."""
        with pytest.raises(BadBound):
            expand_factors([Geom(_r(2))], Scalar(_r(-1)))

    def test_infinite_product_needs_certificate(self):
        """A truncated infinite product needs a next-beta bound."""
        with pytest.raises(MissingNextBetaBound):
            expand_factors([Geom(_r(1))], Scalar(_r(3)), infinite_product=True)


class TestSeriesFromFormula:
    def test_type_two_golden_ratio(self):
        """The golden-ratio product is 1 + t + t^tau + t^2 up to 2."""
        spec = validate_spec(
            {"type": "2", "g": 1, "betas": ["1+0*tau", "0+1*tau"], "tau": [1, 1, 1, 1, 1, 1]}
        )
        series = series_from_formula(spec, Scalar(QuadVal(2, 0)))
        assert series.values() == [QuadVal(0, 0), QuadVal(1, 0), QuadVal(0, 1), QuadVal(2, 0)]
        assert series.all_ones()

    def test_type_four_two_box(self):
        """The Type 4.2 product inside a (2,2) box has six terms."""
        spec = validate_spec({"type": "4.2", "g": 0, "betas": ["(1,0)", "(1,1)"]})
        series = series_from_formula(spec, Box(2, 2))
        assert len(series.terms) == 6
        assert series.all_ones()

    def test_type_one_incomplete_past_certificate(self):
        """Bounds past the next-beta certificate are flagged incomplete."""
        spec = validate_spec(
            {"type": "1", "betas": ["1", "3/2"], "qs": [2], "next_beta_lower_bound": "4"}
        )
        assert series_from_formula(spec, Scalar(_r(7, 2))).complete
        assert not series_from_formula(spec, Scalar(_r(5))).complete

    def test_structural_coincidence_with_tail(self):
        """Type 0 with a tail expands to the Type 4.2 product over the same data."""
        betas = (_r(2), _r(3), _r(7))
        t0 = validate_spec({"type": "0", "g": 1, "betas": betas, "qs": [2], "tail_nonzero": True})
        t42 = ValuationSpec(ValuationType.T42, betas, (2,), g=1)
        bound = Scalar(_r(40))
        diff = diff_series(series_from_formula(t0, bound), expand_factors(series_factors(t42), bound))
        assert diff.equal
        assert diff.describe() == "VERIFIED"

    def test_structural_coincidence_without_tail(self):
        """Type 0 without a tail expands to the Type 2/3 product over the same data."""
        betas = (_r(4), _r(6), _r(13))
        t0 = validate_spec({"type": "0", "g": 2, "betas": betas, "qs": [2, 3]})
        t3 = ValuationSpec(ValuationType.T3, betas, (2,), g=2)
        bound = Scalar(_r(60))
        formula = series_from_formula(t0, bound)
        assert diff_series(formula, expand_factors(series_factors(t3), bound)).equal
        assert not formula.all_ones()

    def test_divisorial_coefficients_can_exceed_one(self):
        """Type 0 lengths count more than one representation."""
        spec = validate_spec({"type": "0", "g": 1, "betas": ["2", "3"], "qs": [2]})
        assert not series_from_formula(spec, Scalar(_r(12))).all_ones()


class TestSeriesFromEnumeration:
    def test_type_four_one(self, t41):
        """Enumeration gives every value with coefficient 1."""
        series = series_from_enumeration(t41, Scalar(_r(7)))
        assert series.values() == [_r(v) for v in [0, 2, 3, 4, 5, 6, 7]]
        assert series.all_ones()

    def test_text_format(self, t41):
        """Header line, then one value and coefficient per line."""
        text = series_from_enumeration(t41, Scalar(_r(4))).to_text()
        assert text == "# bound=4 complete=true\n0\t1\n2\t1\n3\t1\n4\t1\n"

    def test_formula_matches_enumeration_on_corpus(self):
        """Every non-divisorial spec has a formula series equal to its all-ones enumeration."""
        for spec, bound in random_corpus():
            formula = series_from_formula(spec, bound)
            enumerated = series_from_enumeration(spec, bound)
            assert formula.all_ones(), f"{spec} at {bound}"
            assert diff_series(formula, enumerated, spec.tau).equal, f"{spec} at {bound}"


class TestDiffSeries:
    def test_identical(self, t41):
        """A series agrees with itself."""
        series = series_from_enumeration(t41, Scalar(_r(12)))
        assert diff_series(series, series).describe() == "VERIFIED"

    def test_formula_against_enumeration(self, t41):
        """Formula and enumeration agree for Type 4.1."""
        bound = Scalar(_r(12))
        diff = diff_series(series_from_formula(t41, bound), series_from_enumeration(t41, bound))
        assert diff.equal

    def test_first_mismatch(self):
        """Mismatches are reported from the smallest value up."""
        bound = Scalar(_r(12))
        a = expand_factors([Geom(_r(2)), Geom(_r(3))], bound)
        b = expand_factors([Geom(_r(2)), Pair(2, _r(3))], bound)
        diff = diff_series(a, b)
        assert diff.mismatches[0] == (_r(6), 2, 1)
        assert diff.total_mismatches == 6
        assert diff.describe().startswith("MISMATCH (6) first at 6: 2 vs 1")

    def test_mismatch_limit(self):
        """The limit caps reported mismatches, not the total."""
        bound = Scalar(_r(12))
        a = expand_factors([Geom(_r(2)), Geom(_r(3))], bound)
        b = expand_factors([Geom(_r(2)), Pair(2, _r(3))], bound)
        diff = diff_series(a, b, limit=1)
        assert len(diff.mismatches) == 1
        assert diff.total_mismatches == 6

    def test_bounds_must_agree(self):
        """Series truncated at different bounds cannot be compared."""
        a = SeriesTruncation(((_r(0), 1),), Scalar(_r(5)))
        b = SeriesTruncation(((_r(0), 1),), Scalar(_r(6)))
        with pytest.raises(BoundMismatch):
            diff_series(a, b)

    def test_lex_series(self):
        """Formula and enumeration agree for Type 4.2 in a box."""
        spec = validate_spec({"type": "4.2", "g": 0, "betas": ["(1,0)", "(1,1)"]})
        bound = Box(3, 3)
        diff = diff_series(series_from_formula(spec, bound), series_from_enumeration(spec, bound))
        assert diff.equal
        assert series_from_formula(spec, bound).coefficient(LexVal(3, 3)) == 1
