from rest_framework import serializers

from sim.models import Campaign, CampaignPoint


class CampaignPointSerializer(serializers.ModelSerializer):
    """Serialize the statistics of one SNR point"""

    class Meta:
        model = CampaignPoint
        fields = ('snr_db', 'frames', 'frame_errors', 'bler', 'mean_anv',
                  'mean_sort_ops', 'wall_time', 'budget_exhausted',
                  'union_bound')
        read_only_fields = fields


class CampaignSerializer(serializers.ModelSerializer):
    """Serialize a campaign with its points"""
    points = CampaignPointSerializer(many=True, read_only=True)

    class Meta:
        model = Campaign
        fields = ('id', 'profile', 'decoder', 'list_size', 'delta',
                  'split_set', 'seed', 'min_frame_errors', 'max_frames',
                  'created', 'points')
        read_only_fields = fields
