from fractions import Fraction

import pytest

from closed_forms import FAMILY_NAME_TO_CLASS, PENDANT_GADGETS, barbell_best_parameters, barbell_edge_count, \
    barbell_parameters, barbell_thirds_parameters, best_barbell, check_variant_comparisons, \
    comparison_denominator, comparison_quantities, create_family, expected_comparison_signs, k_pendants_formula, \
    kemeny_barbell, kemeny_barbell_best, kemeny_barbell_thirds, kemeny_closed, kemeny_k_pendants, kemeny_kn_path, \
    kemeny_triplet_variants, kn_path_closed_form_results, moment_closed, moment_kn_path, \
    moment_minus_kemeny_kn_path, pendant_gadget, triplet_formulas, triplet_variants_direct
from graphs import attach_pendants, make_barbell, make_complete, make_cycle, make_path, make_star
from kemeny import kemeny, summarize


def test_family_registry():
    assert sorted(FAMILY_NAME_TO_CLASS) == ['complete', 'path', 'star']
    with pytest.raises(ValueError):
        create_family('wheel', 5)
    with pytest.raises(ValueError):
        create_family('path', 1)


@pytest.mark.parametrize('family', ['complete', 'path', 'star'])
@pytest.mark.parametrize('n', [2, 3, 5, 8])
def test_families_match_direct(family, n):
    instance = create_family(family, n)
    summary = summarize(instance.build())
    assert instance.kemeny() == summary.kemeny
    assert instance.moment(0) == summary.moments[0]
    assert all(instance.resistance(i, j) == summary.resistances[i][j] for i in range(n) for j in range(n))


def test_closed_form_values():
    assert kemeny_closed('complete', 5) == Fraction(16, 5)
    assert kemeny_closed('path', 4) == Fraction(19, 6)
    assert kemeny_closed('star', 4) == Fraction(5, 2)
    assert moment_closed('path', 5, 0) == 16
    assert moment_closed('path', 5, 2) == 8
    assert moment_closed('complete', 4, 1) == Fraction(9, 2)
    with pytest.raises(ValueError):
        moment_closed('star', 4, 1)


def test_barbell_with_single_vertex_cliques_is_a_path():
    assert kemeny_barbell(2, 1, 1) == Fraction(19, 6)
    assert kemeny_barbell(5, 1, 1) == kemeny(make_path(7))


@pytest.mark.parametrize('a, b, c', [(2, 2, 2), (3, 2, 4), (6, 4, 5), (4, 5, 1)])
def test_barbell_matches_direct(a, b, c):
    g = make_barbell(1, a, b, c)
    assert barbell_edge_count(a, b, c) == g.m
    assert kemeny_barbell(a, b, c) == kemeny(g)
    assert kemeny_barbell(a, b, c) == kemeny_barbell(a, c, b)


def test_barbell_parameters_are_validated():
    with pytest.raises(ValueError):
        kemeny_barbell(1, 2, 2)
    with pytest.raises(ValueError):
        kemeny_barbell_thirds(10)


@pytest.mark.parametrize('n', [9, 12, 15, 30])
def test_barbell_shortcut_forms(n):
    assert kemeny_barbell_thirds(n) == kemeny_barbell(*barbell_thirds_parameters(n))
    assert kemeny_barbell_best(n) == kemeny_barbell(*barbell_best_parameters(n))
    assert kemeny_barbell_best(n) > kemeny_barbell_thirds(n)


def test_best_barbell_sweep():
    parameters, value = best_barbell(12)
    assert sum(parameters) == 12
    assert value >= kemeny_barbell_best(12)
    assert all(kemeny_barbell(*other) <= value for other in barbell_parameters(12))
    assert barbell_parameters(5) == [(2, 1, 2), (2, 2, 1), (3, 1, 1)]


def test_kn_path():
    assert kemeny_kn_path(2) == Fraction(3, 2)
    assert moment_kn_path(2) == 4
    assert moment_minus_kemeny_kn_path(2) == Fraction(5, 2)
    for n in range(2, 7):
        assert all(result.verified_against_direct for result in kn_path_closed_form_results(n))


def test_k_pendants():
    # One pendant at the end of P_2 gives P_3
    assert k_pendants_formula(1, Fraction(1, 2), 1, 1) == Fraction(3, 2)
    for k in (1, 2, 3):
        assert kemeny_k_pendants(make_cycle(4), 0, k) == kemeny(attach_pendants(make_cycle(4), 0, k))


def test_pendant_gadget_constants():
    for name, (kemeny_value, moment_value) in PENDANT_GADGETS.items():
        summary = summarize(pendant_gadget(name))
        assert summary.kemeny == kemeny_value
        assert summary.moments[0] == moment_value
    assert PENDANT_GADGETS['tilde'][0] == Fraction(61, 24)
    assert PENDANT_GADGETS['hat'][0] == Fraction(47, 20)


@pytest.mark.parametrize('g, v', [(make_path(2), 0), (make_path(4), 1), (make_complete(4), 0), (make_star(4), 2)])
def test_triplet_formulas_match_direct(g, v):
    assert kemeny_triplet_variants(g, v) == triplet_variants_direct(g, v)


def test_triplet_variants_of_an_edge():
    variants = triplet_formulas(1, Fraction(1, 2), 1)
    assert variants.bar == variants.star == Fraction(7, 2)
    assert variants.hat == Fraction(85, 24)
    assert variants.tilde == Fraction(11, 3)


def test_star_centre_has_hat_below_tilde():
    assert comparison_quantities(3, Fraction(5, 2), 3)['hat_over_tilde'] == -38
    variants = kemeny_triplet_variants(make_star(4), 0)
    assert variants.hat < variants.tilde


def test_comparison_quantities_scale_the_differences():
    summary = summarize(make_path(4))
    variants = triplet_formulas(summary.m, summary.kemeny, summary.moments[0])
    quantities = comparison_quantities(summary.m, summary.kemeny, summary.moments[0])
    assert quantities['star_over_hat'] == (variants.star - variants.hat) * comparison_denominator('star_over_hat', 3)


def test_expected_signs():
    assert expected_comparison_signs(1)['star_over_bar'] == 0
    assert expected_comparison_signs(1)['star_over_hat'] == -1
    assert expected_comparison_signs(3)['hat_over_tilde'] is None
    assert expected_comparison_signs(4)['hat_over_tilde'] == 1


@pytest.mark.parametrize('g', [make_path(2), make_path(5), make_complete(5), make_cycle(5), make_star(6)])
def test_variant_comparisons_hold(g):
    for v in range(g.n):
        assert all(check.holds for check in check_variant_comparisons(g, v).values())
