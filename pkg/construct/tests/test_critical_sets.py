import os
import tempfile

import numpy as np
from django.test import SimpleTestCase, tag

from codec.catalog import published_profile
from codec.coding import CodeConfig, ConvPolynomial
from construct.critical_sets import cpscs_construct, critical_subsets, \
    format_index_list, format_ladder_csv, pscs_construct, read_index_file
from construct.exceptions import ConstructionError
from construct.rm import rm_profile, rm_scores
from decoders.scl import scl_decode

G_3211 = ConvPolynomial.from_octal('3211')


def sample_code():
    """(16,8) code: the RM(1,4) indices plus three score-2 indices"""
    return CodeConfig.from_info_set(16, [3, 5, 6, 7, 11, 13, 14, 15],
                                    G_3211)


class CpscsTests(SimpleTestCase):

    def test_rm_128_64(self):
        """Test that CPSCS of PAC(128,64) holds the 35 score-4 indices"""
        info = rm_profile(128, 64).info_set

        cpscs = cpscs_construct(128, 64, info)

        self.assertEqual(len(cpscs), 35)
        self.assertTrue(np.all(rm_scores(128)[cpscs] == 4))

    def test_rm_64_22(self):
        """Test that CPSCS of PAC(64,22) holds the 15 score-4 indices"""
        cpscs = cpscs_construct(64, 22, rm_profile(64, 22).info_set)

        self.assertEqual(len(cpscs), 15)

    def test_published_64_32(self):
        """Test CPSCS of the published (64,32) profile"""
        cfg = published_profile(64, 32, '3211', 2.5).code_config()
        first, second = critical_subsets(64, 32, cfg.info_set)

        cpscs = cpscs_construct(64, 32, cfg.info_set)

        self.assertEqual((len(first), len(second)), (10, 15))
        self.assertEqual(len(cpscs), 25)
        self.assertTrue(set(cpscs) <= set(cfg.info_set))

    def test_wrong_information_set_size(self):
        """Test that the information set must have K indices"""
        with self.assertRaises(ConstructionError):
            cpscs_construct(64, 22, [63])


class PscsTests(SimpleTestCase):

    def test_ladder_is_a_chain(self):
        """Test the ladder sizes, nesting and final entry"""
        cfg = sample_code()
        first, second = critical_subsets(16, 8, cfg.info_set)

        sets = pscs_construct(cfg, 256, 8)

        self.assertEqual(first.tolist(), [3, 5, 6])
        self.assertEqual(second.tolist(), [7, 11, 13, 14])
        self.assertEqual(sets.cpscs.tolist(), [3, 5, 6, 7, 11, 13, 14])
        ladder = sets.pscs_ladder
        self.assertEqual([len(entry) for entry in ladder],
                         list(range(1, 8)))
        for smaller, larger in zip(ladder, ladder[1:]):
            self.assertTrue(set(smaller) < set(larger))
        self.assertEqual(ladder[2].tolist(), first.tolist())
        self.assertEqual(ladder[-1].tolist(), sets.cpscs.tolist())

    def test_narrow_search(self):
        """Test that a one-node search still builds the whole ladder"""
        sets = pscs_construct(sample_code(), 256, 1)

        self.assertEqual(len(sets.pscs_ladder), 7)
        self.assertEqual(sets.pscs_ladder[-1].tolist(), sets.cpscs.tolist())

    def test_bad_search_size(self):
        """Test that the search list must hold a candidate"""
        with self.assertRaises(ConstructionError):
            pscs_construct(sample_code(), 256, 0)


class IndexFileTests(SimpleTestCase):

    def test_round_trip(self):
        """Test writing and reading an index file"""
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'cpscs.txt')
            with open(path, 'w') as stream:
                stream.write('# critical set\n')
                stream.write(format_index_list([7, 11, 13]))
                stream.write('\n14  # last\n')

            self.assertEqual(read_index_file(path).tolist(),
                             [7, 11, 13, 14])

    def test_bad_file(self):
        """Test unreadable and malformed index files"""
        with self.assertRaises(ConstructionError):
            read_index_file('/nonexistent/cpscs.txt')
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'bad.txt')
            with open(path, 'w') as stream:
                stream.write('7\nseven\n')
            with self.assertRaises(ConstructionError):
                read_index_file(path)

    def test_ladder_csv(self):
        """Test the ladder CSV layout"""
        text = format_ladder_csv([np.array([3]), np.array([3, 6])])

        self.assertEqual(text, 'size,indices\n1,3\n2,3 6\n')


@tag('slow')
class PublishedPscsTests(SimpleTestCase):

    def test_size_12_on_published_64_32(self):
        """Test the size-12 PSCS of the published (64,32) profile"""
        cfg = published_profile(64, 32, '3211', 2.5).code_config()

        ladder = pscs_construct(cfg, 20000, 400).pscs_ladder
        llrs = np.random.default_rng(51).normal(1.0, 1.0, size=64)
        result = scl_decode(llrs, cfg, 32, split_set=ladder[11])

        self.assertEqual(len(ladder), 25)
        self.assertEqual(len(ladder[11]), 12)
        self.assertEqual(result.sort_ops, 7)
