from django.conf import settings
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from codec.models import StoredProfile
from decoders.factory import DECODER_KINDS


class DecodeSerializer(serializers.Serializer):
    """One frame of channel LLRs and the decoder to run on it"""
    profile = serializers.PrimaryKeyRelatedField(
        queryset=StoredProfile.objects.all())
    decoder = serializers.ChoiceField(choices=DECODER_KINDS, default='scl')
    list_size = serializers.IntegerField(min_value=1, default=1)
    delta = serializers.FloatField(
        required=False, default=lambda: settings.PACLAB['FANO_DELTA'])
    max_visits = serializers.IntegerField(
        min_value=1, default=lambda: settings.PACLAB['FANO_MAX_VISITS'])
    snr_db = serializers.FloatField(required=False, allow_null=True)
    split_set = serializers.ListField(
        child=serializers.IntegerField(min_value=0), required=False,
        allow_null=True)
    min_sum = serializers.BooleanField(default=False)
    llrs = serializers.ListField(child=serializers.FloatField(),
                                 allow_empty=False)

    def validate_profile(self, value):
        if value.user != self.context['request'].user:
            raise serializers.ValidationError(
                _('Profile not found.'), code='profile')
        return value

    def validate(self, attrs):
        if len(attrs['llrs']) != attrs['profile'].n_bits:
            raise serializers.ValidationError(
                {'llrs': _('Expected %(n)d channel LLRs.')
                 % {'n': attrs['profile'].n_bits}}, code='llrs')
        if attrs['decoder'] == 'fano' and attrs.get('snr_db') is None:
            raise serializers.ValidationError(
                {'snr_db': _('Fano decoding needs the channel Eb/N0.')},
                code='snr_db')
        if attrs['decoder'] == 'scl-cs' and attrs.get('split_set') is None:
            raise serializers.ValidationError(
                {'split_set': _('scl-cs needs a critical set.')},
                code='split_set')
        return attrs
