from django.contrib.auth import get_user_model
from django.test import TestCase

from codec.catalog import published_profile
from codec.models import StoredProfile
from sim.campaign import DecoderSpec, SimConfig, SimRecord
from sim.models import Campaign
from sim.recording import record_campaign, stored_profile_for
from spectrum.weights import WeightSpectrum, union_bound


def sample_user(username='test', password='123'):
    """Create a sample user"""
    return get_user_model().objects.create_user(username, password=password)


def sample_config(**params):
    defaults = {
        'code': published_profile(64, 32, '3211', 2.5).code_config(),
        'decoder': DecoderSpec('scl-cs', 32, split_set=[15, 23, 27]),
        'snr_grid': (2.0, 2.5),
        'seed': 4,
    }
    defaults.update(params)
    return SimConfig(**defaults)


def sample_records():
    return [SimRecord(2.0, 1000, 100, 800.0, 27.0, wall_time=1.5),
            SimRecord(2.5, 4000, 100, 800.0, 27.0, wall_time=5.0)]


class StoredProfileTests(TestCase):

    def test_creates_then_reuses(self):
        """Test that a code is stored once per user"""
        user = sample_user()
        code = sample_config().code

        first = stored_profile_for(user, code, 2.5)
        second = stored_profile_for(user, code)

        self.assertEqual(first.id, second.id)
        self.assertEqual(first.profile_hex, '0003157F171F177F')
        self.assertEqual(first.design_snr_db, 2.5)
        self.assertEqual(StoredProfile.objects.count(), 1)

    def test_profiles_are_per_user(self):
        """Test that another user gets a profile of their own"""
        code = sample_config().code

        stored_profile_for(sample_user(), code)
        stored_profile_for(sample_user('other'), code)

        self.assertEqual(StoredProfile.objects.count(), 2)


class RecordCampaignTests(TestCase):

    def test_record(self):
        """Test storing a campaign with its points"""
        user = sample_user()

        campaign = record_campaign(user, sample_config(), sample_records())

        self.assertEqual(Campaign.objects.count(), 1)
        self.assertEqual(campaign.decoder, 'scl-cs')
        self.assertEqual(campaign.split_set, '15 23 27')
        self.assertIsNone(campaign.delta)
        points = list(campaign.points.all())
        self.assertEqual([p.snr_db for p in points], [2.0, 2.5])
        self.assertEqual(points[0].bler, 0.1)
        self.assertIsNone(points[0].union_bound)

    def test_record_with_spectrum(self):
        """Test that a spectrum adds the union bound to every point"""
        spectrum = WeightSpectrum({0: 1, 8: 100, 10: 300})

        campaign = record_campaign(
            sample_user(), sample_config(decoder=DecoderSpec('fano')),
            sample_records(), spectrum)

        self.assertEqual(campaign.delta, 2.0)
        point = campaign.points.get(snr_db=2.5)
        self.assertAlmostEqual(point.union_bound,
                               union_bound(spectrum, 0.5, 2.5))
