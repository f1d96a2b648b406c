import csv
import os
import tempfile
from io import StringIO

import numpy as np
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from codec.catalog import published_profile
from codec.transforms import pac_encode


def sample_llr_file(directory, frames=2, seed=0):
    """Strong LLR frames of random messages, one frame per line"""
    cfg = published_profile(64, 32, '3211', 2.5).code_config()
    rng = np.random.default_rng(seed)
    messages = rng.integers(0, 2, size=(frames, 32))
    llrs = 20.0 * (1.0 - 2.0 * pac_encode(messages, cfg))
    path = os.path.join(directory, 'llrs.txt')
    np.savetxt(path, llrs)
    return path, messages


class DecodeCommandTests(SimpleTestCase):

    def test_decode_frames(self):
        """Test one CSV row per decoded frame"""
        out = StringIO()
        with tempfile.TemporaryDirectory() as directory:
            path, messages = sample_llr_file(directory)

            call_command('decode', '--catalog', '64,32,3211,2.5',
                         '--decoder', 'scl', '--list-size', '4',
                         '--llr-file', path, stdout=out)

        rows = list(csv.DictReader(StringIO(out.getvalue())))
        self.assertEqual(len(rows), 2)
        for row, message in zip(rows, messages):
            self.assertEqual(row['d_hat'], ''.join(map(str, message)))
            self.assertEqual(row['sort_ops'], '30')
            self.assertEqual(row['exhausted'], 'False')
        self.assertEqual(rows[1]['frame'], '1')

    def test_decode_with_critical_set(self):
        """Test list decoding restricted to a critical-set file"""
        cfg = published_profile(64, 32, '3211', 2.5).code_config()
        out = StringIO()
        with tempfile.TemporaryDirectory() as directory:
            path, messages = sample_llr_file(directory, frames=1)
            split = os.path.join(directory, 'split.txt')
            with open(split, 'w') as stream:
                stream.write(''.join(f'{i}\n' for i in cfg.info_set[-8:]))

            call_command('decode', '--catalog', '64,32,3211,2.5',
                         '--decoder', 'scl-cs', '--list-size', '4',
                         '--critical-set', split, '--llr-file', path,
                         stdout=out)

        row = next(csv.DictReader(StringIO(out.getvalue())))
        self.assertEqual(row['d_hat'], ''.join(map(str, messages[0])))
        self.assertEqual(row['sort_ops'], '6')

    def test_fano(self):
        """Test Fano decoding from the command line"""
        out = StringIO()
        with tempfile.TemporaryDirectory() as directory:
            path, messages = sample_llr_file(directory, frames=1)

            call_command('decode', '--catalog', '64,32,3211,2.5',
                         '--decoder', 'fano', '--snr', '2.5',
                         '--llr-file', path, stdout=out)

        row = next(csv.DictReader(StringIO(out.getvalue())))
        self.assertEqual(row['d_hat'], ''.join(map(str, messages[0])))

    def test_errors(self):
        """Test missing files and options"""
        with self.assertRaises(CommandError):
            call_command('decode', '--catalog', '64,32,3211,2.5',
                         '--llr-file', '/nonexistent/llrs.txt',
                         stdout=StringIO())
        with tempfile.TemporaryDirectory() as directory:
            path, _ = sample_llr_file(directory, frames=1)
            with self.assertRaises(CommandError):
                call_command('decode', '--catalog', '64,32,3211,2.5',
                             '--decoder', 'fano', '--llr-file', path,
                             stdout=StringIO())

    def test_zero_fano_options_are_rejected(self):
        """Test that a zero spacing or budget is not replaced by a default"""
        with tempfile.TemporaryDirectory() as directory:
            path, _ = sample_llr_file(directory, frames=1)
            for option in ('--delta', '--max-visits'):
                with self.assertRaises(CommandError):
                    call_command('decode', '--catalog', '64,32,3211,2.5',
                                 '--decoder', 'fano', '--snr', '2.5',
                                 option, '0', '--llr-file', path,
                                 stdout=StringIO())
