from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from codec.coding import ConvPolynomial, RateProfile
from codec.models import StoredProfile
from codec.transforms import parse_bit_string


class StoredProfileSerializer(serializers.ModelSerializer):
    """Serialize a stored rate profile"""

    class Meta:
        model = StoredProfile
        fields = ('id', 'name', 'n_bits', 'k_bits', 'conv_poly',
                  'design_snr_db', 'method', 'profile_hex', 'created')
        read_only_fields = ('id', 'created')

    def validate_conv_poly(self, value):
        try:
            return ConvPolynomial.from_octal(value).octal_repr
        except ValueError as exc:
            raise serializers.ValidationError(str(exc), code='conv_poly')

    def validate(self, attrs):
        """Check the hex profile against N and K"""
        instance = self.instance
        n_bits = attrs.get('n_bits', getattr(instance, 'n_bits', None))
        k_bits = attrs.get('k_bits', getattr(instance, 'k_bits', None))
        profile_hex = attrs.get('profile_hex',
                                getattr(instance, 'profile_hex', None))
        try:
            profile = RateProfile.from_hex(profile_hex, n_bits)
        except ValueError as exc:
            raise serializers.ValidationError(
                {'profile_hex': str(exc)}, code='profile')
        if profile.k_bits != k_bits:
            msg = _('The profile has %(found)d information bits, not '
                    '%(k)d.') % {'found': profile.k_bits, 'k': k_bits}
            raise serializers.ValidationError({'k_bits': msg}, code='profile')
        attrs['profile_hex'] = profile.to_hex()
        return attrs


class MessageSerializer(serializers.Serializer):
    """A binary message to encode"""
    message = serializers.CharField()

    def validate_message(self, value):
        try:
            bits = parse_bit_string(value)
        except ValueError as exc:
            raise serializers.ValidationError(str(exc), code='message')
        k_bits = self.context['profile'].k_bits
        if bits.size != k_bits:
            msg = _('The message must have %(k)d bits.') % {'k': k_bits}
            raise serializers.ValidationError(msg, code='message')
        return bits


class SpectrumQuerySerializer(serializers.Serializer):
    """Query parameters of a spectrum estimate"""
    list_size = serializers.IntegerField(min_value=2, default=256)
    snr = serializers.CharField(required=False, default='')

    def validate_snr(self, value):
        try:
            return [float(s) for s in value.split(',') if s.strip()]
        except ValueError:
            raise serializers.ValidationError(
                _('snr must be a comma separated list of numbers.'),
                code='snr')
