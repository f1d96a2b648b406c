import itertools

import numpy as np
from django.test import SimpleTestCase, tag

from channel.gaussian import ChannelParams, check_finite_complexity, \
    gaussian_approximation
from codec.coding import CodeConfig, ConvPolynomial, RateProfile
from construct.exceptions import ConstructionError
from construct.list_search import ListSearch, first_occurrences, grow, \
    lexicographic_order, ls_construct, ls_metric_compare
from construct.rm import ga_profile, rm_partition, rm_polar_profile, \
    rm_profile
from spectrum.estimation import enumerate_spectrum, estimate_spectrum
from spectrum.weights import WeightSpectrum, min_weight

G_3211 = ConvPolynomial.from_octal('3211')

# (16,8): A = the five score >= 3 indices, B = the six score-2 indices
INITIAL_16 = [7, 11, 13, 14, 15]
OPTIONAL_16 = [3, 5, 6, 9, 10, 12]


def sample_search(search_size=20, keep_duplicates=False, design_snr_db=8.0):
    return ListSearch(16, 8, G_3211, 2048, search_size, design_snr_db,
                      keep_duplicates)


def added_weights(info_set):
    """Spectrum of A u S minus the spectrum of A"""
    n_bits = 16
    with_optional = enumerate_spectrum(
        CodeConfig.from_info_set(n_bits, info_set, G_3211))
    initial = enumerate_spectrum(
        CodeConfig.from_info_set(n_bits, INITIAL_16, G_3211))
    return with_optional.as_vector(n_bits) - initial.as_vector(n_bits)


class MetricCompareTests(SimpleTestCase):

    def test_examples(self):
        """Test the lexicographic comparison of LS metrics"""
        self.assertEqual(ls_metric_compare([0, 5, 2, 0], [0, 5, 2, 1]), -1)
        self.assertEqual(ls_metric_compare([0, 5, 2, 1], [0, 5, 2, 0]), 1)
        self.assertEqual(ls_metric_compare([0, 5, 2], [0, 5, 2, 0]), 0)
        self.assertEqual(
            ls_metric_compare(WeightSpectrum({16: 2160}),
                              WeightSpectrum({16: 2159, 18: 9999})), 1)

    def test_total_order(self):
        """Test antisymmetry and transitivity on random metrics"""
        rng = np.random.default_rng(41)
        metrics = rng.integers(0, 3, size=(12, 5))
        for a, b in itertools.product(metrics, repeat=2):
            self.assertEqual(ls_metric_compare(a, b),
                             -ls_metric_compare(b, a))
        for a, b, c in itertools.product(metrics[:6], repeat=3):
            if ls_metric_compare(a, b) <= 0 and ls_metric_compare(b, c) <= 0:
                self.assertLessEqual(ls_metric_compare(a, c), 0)

    def test_lexicographic_order(self):
        """Test ordering metric rows from the lowest weight up"""
        metrics = np.array([[0, 2, 1], [0, 1, 9], [0, 2, 0], [0, 1, 9]])

        self.assertEqual(lexicographic_order(metrics).tolist(), [1, 3, 2, 0])
        self.assertEqual(lexicographic_order(metrics, descending=True)
                         .tolist(), [0, 2, 1, 3])


class GrowTests(SimpleTestCase):

    def test_children(self):
        """Test one child per free candidate of every parent"""
        parents = np.array([[1, 0, 0], [0, 1, 0]], dtype=np.uint8)
        metrics = np.array([[0, 1], [0, 2]])
        increments = np.arange(12).reshape(2, 3, 2)

        children, child_metrics, parent_idx = grow(parents, metrics,
                                                   increments)

        self.assertEqual(children.tolist(),
                         [[1, 1, 0], [1, 0, 1], [1, 1, 0], [0, 1, 1]])
        self.assertEqual(parent_idx.tolist(), [0, 0, 1, 1])
        self.assertEqual(child_metrics.tolist(),
                         [[2, 4], [4, 6], [6, 9], [10, 13]])
        self.assertEqual(first_occurrences(children).tolist(), [0, 1, 3])

    def test_allowed_mask(self):
        """Test restricting growth to allowed candidates"""
        parents = np.zeros((1, 3), dtype=np.uint8)

        children, _, _ = grow(parents, np.zeros((1, 1), np.int64),
                              np.zeros((1, 3, 1), np.int64),
                              np.array([True, False, True]))

        self.assertEqual(children.tolist(), [[1, 0, 0], [0, 0, 1]])


class ListSearchTests(SimpleTestCase):

    def test_partition_of_sample_code(self):
        """Test the sets the search works over"""
        partition = rm_partition(16, 8)

        self.assertEqual(partition.initial_set.tolist(), INITIAL_16)
        self.assertEqual(partition.optional_set.tolist(), OPTIONAL_16)

    def test_exhaustive_search_finds_best_profile(self):
        """Test a search wide enough to keep every candidate"""
        outcome = sample_search().run()

        self.assertEqual(len(outcome.nodes), 20)
        best = min(tuple(added_weights(node.info_set))
                   for node in outcome.nodes)
        self.assertEqual(tuple(outcome.metric.as_vector(16)), best)
        self.assertEqual(outcome.profile.k_bits, 8)
        self.assertTrue(set(INITIAL_16) <= set(outcome.profile.info_set))

    def test_node_metrics_count_added_codewords(self):
        """Test every node metric against exhaustive enumeration"""
        outcome = sample_search().run()

        for node in outcome.nodes:
            self.assertEqual(node.metric.as_vector(16).tolist(),
                             added_weights(node.info_set).tolist())
            self.assertFalse(set(node.info_set)
                             & set(node.remaining_optional))
            self.assertEqual(len(node.remaining_optional), 3)

    def test_nodes_sorted_by_metric(self):
        """Test that surviving nodes come in ascending metric order"""
        nodes = sample_search().run().nodes

        for first, second in zip(nodes, nodes[1:]):
            self.assertLessEqual(
                ls_metric_compare(first.metric, second.metric), 0)

    def test_pruning_limits_nodes(self):
        """Test that at most Lg distinct nodes survive"""
        nodes = sample_search(search_size=4).run().nodes

        self.assertEqual(len(nodes), 4)
        self.assertEqual(len({tuple(node.info_set) for node in nodes}), 4)

    def test_keep_duplicates(self):
        """Test that retained duplicates still respect Lg"""
        nodes = sample_search(search_size=30, keep_duplicates=True) \
            .run().nodes

        self.assertEqual(len(nodes), 30)
        self.assertLess(len({tuple(node.info_set) for node in nodes}), 30)

    def test_profiles_pass_finite_complexity(self):
        """Test that every surviving node passes the cutoff-rate check"""
        stats = gaussian_approximation(16, ChannelParams(8.0, 0.5))

        for node in sample_search().run().nodes:
            self.assertTrue(check_finite_complexity(
                stats, RateProfile.from_indices(16, node.info_set)))

    def test_low_design_snr_fails(self):
        """Test that a hopeless design SNR prunes every node"""
        with self.assertRaises(ConstructionError):
            sample_search(design_snr_db=-5.0).run()

    def test_exact_rm_size_returns_rm_profile(self):
        """Test the early return at an RM dimension"""
        self.assertEqual(ls_construct(64, 22, '3211', 64, 8, 2.0),
                         rm_profile(64, 22))

    def test_bad_search_size(self):
        """Test that the search list must hold a node"""
        with self.assertRaises(ConstructionError):
            sample_search(search_size=0)


@tag('slow')
class PublishedConstructionTests(SimpleTestCase):

    def test_ls_64_32(self):
        """Test the (64,32) LS profile at 2.5 dB against RM-polar"""
        stats = gaussian_approximation(64, ChannelParams(2.5, 0.5))
        partition = rm_partition(64, 32)

        profile = ls_construct(64, 32, '3211', 40000, 400, 2.5)

        self.assertEqual(profile.k_bits, 32)
        self.assertTrue(set(partition.initial_set) <= set(profile.info_set))
        self.assertTrue(check_finite_complexity(stats, profile))
        ls_spectrum = estimate_spectrum(CodeConfig(profile, G_3211), 40000)
        polar_spectrum = estimate_spectrum(
            CodeConfig(rm_polar_profile(64, 32, stats), G_3211), 40000)
        ga_spectrum = estimate_spectrum(
            CodeConfig(ga_profile(64, 32, stats), G_3211), 40000)
        d_min = min_weight(ls_spectrum)
        self.assertGreaterEqual(d_min, 8)
        self.assertLessEqual(d_min, 16)
        self.assertGreaterEqual(d_min, min_weight(ga_spectrum))
        self.assertEqual(ls_metric_compare(ls_spectrum, polar_spectrum), -1)
        self.assertLess(ls_spectrum.count(8), polar_spectrum.count(8))
