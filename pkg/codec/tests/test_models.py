from django.contrib.auth import get_user_model
from django.test import TestCase

from codec import models
from codec.coding import CodeConfig, ConvPolynomial


def sample_user(username='test', password='123'):
    """Create a sample user"""
    return get_user_model().objects.create_user(username, password=password)


def sample_profile(user, name='LS 2.5dB', profile_hex='0003157F171F177F'):
    """Create a sample (64,32) profile"""
    return models.StoredProfile.objects.create(
        user=user, name=name, n_bits=64, k_bits=32, conv_poly='3211',
        design_snr_db=2.5, method='ls', profile_hex=profile_hex)


class ModelTests(TestCase):

    def test_profile_str(self):
        """Test the profile string representation"""
        profile = sample_profile(sample_user())

        self.assertEqual(str(profile), profile.name)

    def test_profile_code_config(self):
        """Test building the code of a stored profile"""
        profile = sample_profile(sample_user())

        self.assertEqual(
            profile.code_config(),
            CodeConfig.from_hex('0003157F171F177F', 64,
                                ConvPolynomial.from_octal('3211')))

    def test_profiles_ordered_by_name(self):
        """Test the default ordering of stored profiles"""
        user = sample_user()
        sample_profile(user, name='b')
        sample_profile(user, name='a')

        names = [p.name for p in models.StoredProfile.objects.all()]

        self.assertEqual(names, ['a', 'b'])
