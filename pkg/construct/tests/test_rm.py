from math import comb

import numpy as np
from django.test import SimpleTestCase

from channel.gaussian import ChannelParams, gaussian_approximation
from construct.exceptions import ConstructionError
from construct.methods import build_profile
from construct.rm import ga_profile, rm_partition, rm_polar_profile, \
    rm_profile, rm_score, rm_scores


def sample_stats(n_bits, ebn0_db=3.0, rate=0.5):
    return gaussian_approximation(n_bits, ChannelParams(ebn0_db, rate))


class RmScoreTests(SimpleTestCase):

    def test_examples(self):
        """Test a few RM scores"""
        self.assertEqual(rm_score(5, 3), 2)
        self.assertEqual(rm_score(0, 6), 0)
        self.assertEqual(rm_score(63, 6), 6)

    def test_binomial_distribution(self):
        """Test that C(n, q) indices have score q"""
        counts = np.bincount(rm_scores(64))

        self.assertEqual(counts.tolist(), [comb(6, q) for q in range(7)])

    def test_out_of_range(self):
        """Test that an index outside the block is rejected"""
        with self.assertRaises(ConstructionError):
            rm_score(8, 3)


class RmPartitionTests(SimpleTestCase):

    def test_exact_64_22(self):
        """Test that (64,22) is the RM code of scores 4 to 6"""
        partition = rm_partition(64, 22)
        scores = rm_scores(64)

        self.assertTrue(partition.exact)
        self.assertEqual(sorted(set(scores[partition.initial_set])),
                         [4, 5, 6])

    def test_generalized_64_32(self):
        """Test the set sizes of the (64,32) partition"""
        partition = rm_partition(64, 32)

        self.assertFalse(partition.exact)
        self.assertEqual(partition.order, 3)
        self.assertEqual(len(partition.initial_set), 22)
        self.assertEqual(len(partition.optional_set), 20)
        self.assertEqual(len(partition.generalized_set), 42)
        self.assertEqual(partition.missing, 10)
        self.assertFalse(set(partition.initial_set)
                         & set(partition.optional_set))

    def test_exact_128_64(self):
        """Test that (128,64) is the RM code of scores 4 to 7"""
        partition = rm_partition(128, 64)

        self.assertTrue(partition.exact)
        self.assertEqual(partition.order, 3)
        self.assertEqual(len(partition.optional_set), comb(7, 3))

    def test_bounds_on_order(self):
        """Test the threshold bracket of K for every K at N=32"""
        scores = rm_scores(32)
        for k_bits in range(1, 33):
            order = rm_partition(32, k_bits).order
            self.assertLessEqual(np.count_nonzero(scores > order), k_bits)
            if k_bits < 32:
                self.assertLess(k_bits, np.count_nonzero(scores >= order))

    def test_bad_dimension(self):
        """Test that K outside [1, N] is rejected"""
        with self.assertRaises(ConstructionError):
            rm_partition(16, 0)
        with self.assertRaises(ConstructionError):
            rm_partition(16, 17)


class RmProfileTests(SimpleTestCase):

    def test_rm_profile(self):
        """Test the (16,5) RM profile"""
        self.assertEqual(rm_profile(16, 5).info_set.tolist(),
                         [7, 11, 13, 14, 15])

    def test_no_rm_profile(self):
        """Test that a dimension between RM sizes has no RM profile"""
        with self.assertRaises(ConstructionError):
            rm_profile(64, 32)

    def test_rm_polar_at_exact_size(self):
        """Test that RM-polar ignores statistics at an RM size"""
        self.assertEqual(rm_polar_profile(64, 22), rm_profile(64, 22))

    def test_rm_polar_picks_reliable_optional_indices(self):
        """Test that RM-polar adds the most reliable score-3 indices"""
        stats = sample_stats(64)
        partition = rm_partition(64, 32)
        ranked = partition.optional_set[
            np.argsort(stats.z[partition.optional_set], kind='stable')]

        profile = rm_polar_profile(64, 32, stats)

        self.assertEqual(profile.k_bits, 32)
        self.assertEqual(
            set(profile.info_set),
            set(partition.initial_set) | set(ranked[:10]))

    def test_rm_polar_needs_statistics(self):
        """Test that RM-polar needs statistics off the RM sizes"""
        with self.assertRaises(ConstructionError):
            rm_polar_profile(64, 32)

    def test_ga_profile(self):
        """Test that GA picks the bit channels with the smallest z"""
        stats = sample_stats(32, 2.0)

        profile = ga_profile(32, 16, stats)

        chosen = stats.z[profile.info_set]
        others = np.delete(stats.z, profile.info_set)
        self.assertEqual(profile.k_bits, 16)
        self.assertLessEqual(chosen.max(), others.min())
        with self.assertRaises(ConstructionError):
            ga_profile(64, 16, stats)


class BuildProfileTests(SimpleTestCase):

    def test_methods(self):
        """Test dispatching to each simple method"""
        self.assertEqual(build_profile('rm', 64, 22, '3211'),
                         rm_profile(64, 22))
        self.assertEqual(build_profile('rm-polar', 64, 32, '3211', 3.0),
                         rm_polar_profile(64, 32, sample_stats(64)))
        self.assertEqual(build_profile('ga', 32, 16, '3211', 2.0),
                         ga_profile(32, 16, sample_stats(32, 2.0)))

    def test_errors(self):
        """Test unknown methods and a missing design SNR"""
        with self.assertRaises(ConstructionError):
            build_profile('mc', 64, 32, '3211', 3.0)
        with self.assertRaises(ConstructionError):
            build_profile('ga', 64, 32, '3211')
        with self.assertRaises(ConstructionError):
            build_profile('rm-polar', 64, 32, '3211')

    def test_rm_polar_without_snr_at_rm_size(self):
        """Test that RM-polar at an RM size needs no design SNR"""
        self.assertEqual(build_profile('rm-polar', 64, 22, '3211'),
                         rm_profile(64, 22))
