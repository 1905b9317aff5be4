import pytest

from mfkit.algorithms.corpus import REGISTRY, build_example, get_example
from mfkit.algorithms.factorization import validate_factorization
from mfkit.algorithms.hom import hom_classes
from mfkit.selftest import oracle_hom_dim, random_stabilizations, suite_fold, suite_koszul, suite_spectral
from mfkit.utilities.errors import MfkitError


def test_registry_manifests_hold():
    for name, entry in REGISTRY.items():
        report = entry.check()
        assert report.valid, str(report)


def test_manifest_with_parameters():
    assert get_example('mf_pair').check(a=2, d=5).valid
    assert get_example('stab_koszul').check(n=2, w='x*y + y^2').valid
    assert get_example('envelope').check(a=0, d=2).valid


def test_derived_examples_on_a_stabilization():
    for name in ('envelope', 'cone_id', 'id_chain_tot', 'split_ses_tot'):
        report = get_example(name).check(base='stab_koszul', n=2, w='x*y')
        assert report.valid, str(report)
    G = build_example('envelope', base='stab_koszul', n=2, w='x*y')
    assert G.ranks == (4, 4)
    with pytest.raises(MfkitError):
        build_example('cone_id', base='other')


def test_unknown_example_lists_names():
    with pytest.raises(MfkitError) as error:
        get_example('nope')
    assert 'mf_pair' in str(error.value)
    with pytest.raises(MfkitError):
        build_example('mf_pair', a=4, d=3)


def test_oracle_matches_hom():
    for a, b in ((1, 1), (1, 2), (0, 2), (3, 1)):
        E, F = build_example('mf_pair', a=a, d=4), build_example('mf_pair', a=b, d=4)
        for n in (0, 1):
            for t in range(-3, 4):
                assert hom_classes(E, F, n, t).dim == oracle_hom_dim(a, b, 4, n, t)


def test_random_population_is_reproducible():
    first = random_stabilizations(7, 5)
    second = random_stabilizations(7, 5)
    assert [E for E, _, _ in first] == [E for E, _, _ in second]
    assert all(validate_factorization(E).valid for E, _, _ in first)


def test_suites_on_a_small_population():
    population = random_stabilizations(11, 6)
    for suite in (suite_koszul, suite_fold, suite_spectral):
        for label, outcome in suite(population):
            assert bool(outcome), label
