from django.conf import settings
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from codec.models import StoredProfile
from construct.methods import CONSTRUCTION_METHODS, exact_rm_size


class ConstructProfileSerializer(serializers.Serializer):
    """Parameters of a rate-profile construction"""
    name = serializers.CharField(max_length=255)
    method = serializers.ChoiceField(choices=CONSTRUCTION_METHODS)
    n_bits = serializers.IntegerField(min_value=4)
    k_bits = serializers.IntegerField(min_value=1)
    conv_poly = serializers.CharField(
        max_length=32, default=lambda: settings.PACLAB['DEFAULT_CONV_POLY'])
    design_snr_db = serializers.FloatField(required=False, allow_null=True)
    list_size = serializers.IntegerField(min_value=2, default=1024)
    search_size = serializers.IntegerField(min_value=1, default=64)
    keep_duplicates = serializers.BooleanField(default=False)

    def validate(self, attrs):
        if attrs['k_bits'] > attrs['n_bits']:
            raise serializers.ValidationError(
                {'k_bits': _('K cannot exceed N.')}, code='k_bits')
        needs_snr = attrs['method'] in ('ga', 'ls') or (
            attrs['method'] == 'rm-polar'
            and not exact_rm_size(attrs['n_bits'], attrs['k_bits']))
        if needs_snr and attrs.get('design_snr_db') is None:
            raise serializers.ValidationError(
                {'design_snr_db': _('This method needs a design SNR.')},
                code='design_snr_db')
        user = self.context['request'].user
        if StoredProfile.objects.filter(user=user,
                                        name=attrs['name']).exists():
            raise serializers.ValidationError(
                {'name': _('A profile with this name already exists.')},
                code='name')
        return attrs


class CriticalSetsSerializer(serializers.Serializer):
    """Critical-set request for a stored profile"""
    profile = serializers.PrimaryKeyRelatedField(
        queryset=StoredProfile.objects.all())
    method = serializers.ChoiceField(choices=('cpscs', 'pscs'),
                                     default='cpscs')
    list_size = serializers.IntegerField(
        min_value=2, default=lambda: settings.PACLAB['PSCS_LIST_SIZE'])
    search_size = serializers.IntegerField(
        min_value=1, default=lambda: settings.PACLAB['PSCS_SEARCH_SIZE'])

    def validate_profile(self, value):
        if value.user != self.context['request'].user:
            raise serializers.ValidationError(
                _('Profile not found.'), code='profile')
        return value
