import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from codec.catalog import published_profile
from codec.profile_io import write_profile_file
from codec.transforms import format_bits, pac_encode, parse_bit_string


class EncodeCommandTests(SimpleTestCase):

    def test_encode_message(self):
        """Test encoding one message with a catalog code"""
        message = '01' * 16
        out = StringIO()

        call_command('encode', '--catalog', '64,32,3211,2.5',
                     '--message', message, stdout=out)

        cfg = published_profile(64, 32, '3211', 2.5).code_config()
        self.assertEqual(
            out.getvalue(),
            format_bits(pac_encode(parse_bit_string(message), cfg)) + '\n')

    def test_encode_message_file(self):
        """Test encoding a file of messages with a profile file"""
        cfg = published_profile(64, 32, '3211', 2.5).code_config()
        with tempfile.TemporaryDirectory() as directory:
            profile = os.path.join(directory, 'ls.txt')
            messages = os.path.join(directory, 'messages.txt')
            target = os.path.join(directory, 'codewords.txt')
            write_profile_file(profile, cfg, 2.5)
            with open(messages, 'w') as stream:
                stream.write('# two frames\n' + '0' * 32 + '\n'
                             + '1' * 32 + '\n')

            call_command('encode', '--profile', profile, '--message-file',
                         messages, '--out', target)

            with open(target) as stream:
                lines = stream.read().splitlines()

        self.assertEqual(lines[0], '0' * 64)
        self.assertEqual(
            lines[1], format_bits(pac_encode(parse_bit_string('1' * 32), cfg)))

    def test_bad_message(self):
        """Test that a message of the wrong length fails the command"""
        with self.assertRaises(CommandError):
            call_command('encode', '--catalog', '64,32,3211,2.5',
                         '--message', '0101', stdout=StringIO())

    def test_unknown_catalog_entry(self):
        """Test that an unknown catalog key fails the command"""
        with self.assertRaises(CommandError):
            call_command('encode', '--catalog', '64,32,3211,9.9',
                         '--message', '0', stdout=StringIO())
