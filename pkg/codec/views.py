from django.conf import settings
from django.db.models import ProtectedError
from django.utils.translation import gettext_lazy as _
from rest_framework import status, viewsets
from rest_framework.authentication import TokenAuthentication
from rest_framework.decorators import action
from rest_framework.exceptions import ValidationError
from rest_framework.permissions import IsAuthenticated
from rest_framework.response import Response

from codec import serializers
from codec.models import StoredProfile
from codec.transforms import format_bits, pac_encode
from spectrum.estimation import estimate_spectrum
from spectrum.weights import min_weight, union_bound_table


def int_query_param(request, name):
    """Integer query parameter, None when absent"""
    value = request.query_params.get(name)
    if not value:
        return None
    try:
        return int(value)
    except ValueError:
        raise ValidationError(
            {name: _('A whole number is required.')}, code='invalid')


class ProfileViewSet(viewsets.ModelViewSet):
    """Manage stored rate profiles in the database"""
    authentication_classes = (TokenAuthentication,)
    permission_classes = (IsAuthenticated,)
    queryset = StoredProfile.objects.all()
    serializer_class = serializers.StoredProfileSerializer

    def get_queryset(self):
        """Retrieve the profiles for the authenticated user"""
        queryset = self.queryset
        n_bits = int_query_param(self.request, 'n')
        if n_bits is not None:
            queryset = queryset.filter(n_bits=n_bits)

        return queryset.filter(user=self.request.user)

    def perform_create(self, serializer):
        """Create a new profile"""
        serializer.save(user=self.request.user)

    def destroy(self, request, *args, **kwargs):
        """Delete a profile unless recorded campaigns use it"""
        try:
            return super().destroy(request, *args, **kwargs)
        except ProtectedError:
            return Response(
                {'detail': _('The profile is used by recorded campaigns.')},
                status=status.HTTP_409_CONFLICT)

    @action(methods=['POST'], detail=True)
    def encode(self, request, pk=None):
        """Encode a message with the stored code"""
        profile = self.get_object()
        serializer = serializers.MessageSerializer(
            data=request.data, context={'profile': profile})
        serializer.is_valid(raise_exception=True)
        codeword = pac_encode(serializer.validated_data['message'],
                              profile.code_config())
        return Response({'codeword': format_bits(codeword)})

    @action(methods=['GET'], detail=True)
    def spectrum(self, request, pk=None):
        """Estimate the low-weight spectrum of the stored code"""
        profile = self.get_object()
        serializer = serializers.SpectrumQuerySerializer(
            data=request.query_params)
        serializer.is_valid(raise_exception=True)
        cfg = profile.code_config()
        try:
            spectrum = estimate_spectrum(
                cfg, serializer.validated_data['list_size'],
                settings.PACLAB['NOISELESS_LLR'])
            d_min = min_weight(spectrum)
        except ValueError as exc:
            return Response({'detail': str(exc)},
                            status=status.HTTP_400_BAD_REQUEST)
        table = union_bound_table(spectrum, cfg.rate,
                                  serializer.validated_data['snr'])
        return Response({
            'list_size_used': spectrum.list_size_used,
            'counts': {str(d): a for d, a in spectrum.counts.items()},
            'd_min': d_min,
            'union_bound': [
                {'snr_db': snr, 'bound': full, 'dominant': dominant}
                for snr, full, dominant in table
            ],
        })
