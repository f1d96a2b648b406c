import logging

from django.conf import settings
from rest_framework import generics, status
from rest_framework.authentication import TokenAuthentication
from rest_framework.permissions import IsAuthenticated
from rest_framework.response import Response

from codec.coding import ConvPolynomial
from codec.models import StoredProfile
from codec.serializers import StoredProfileSerializer
from construct import serializers
from construct.critical_sets import cpscs_construct, pscs_construct
from construct.methods import build_profile

logger = logging.getLogger(__name__)


class ConstructProfileView(generics.GenericAPIView):
    """Build a rate profile and store it for the user"""
    authentication_classes = (TokenAuthentication,)
    permission_classes = (IsAuthenticated,)
    serializer_class = serializers.ConstructProfileSerializer

    def post(self, request):
        serializer = self.get_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        try:
            conv_poly = ConvPolynomial.from_octal(data['conv_poly'])
            profile = build_profile(
                data['method'], data['n_bits'], data['k_bits'], conv_poly,
                data.get('design_snr_db'), data['list_size'],
                data['search_size'], data['keep_duplicates'],
                settings.PACLAB['NOISELESS_LLR'])
        except ValueError as exc:
            return Response({'detail': str(exc)},
                            status=status.HTTP_400_BAD_REQUEST)

        stored = StoredProfile.objects.create(
            user=request.user,
            name=data['name'],
            n_bits=data['n_bits'],
            k_bits=data['k_bits'],
            conv_poly=conv_poly.octal_repr,
            design_snr_db=data.get('design_snr_db'),
            method=data['method'],
            profile_hex=profile.to_hex(),
        )
        logger.info('stored %s profile %r for %s', data['method'],
                    stored.name, request.user)
        return Response(StoredProfileSerializer(stored).data,
                        status=status.HTTP_201_CREATED)


class CriticalSetsView(generics.GenericAPIView):
    """CPSCS, and the PSCS ladder on request, of a stored profile"""
    authentication_classes = (TokenAuthentication,)
    permission_classes = (IsAuthenticated,)
    serializer_class = serializers.CriticalSetsSerializer

    def post(self, request):
        serializer = self.get_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        cfg = data['profile'].code_config()
        try:
            if data['method'] == 'pscs':
                sets = pscs_construct(cfg, data['list_size'],
                                      data['search_size'],
                                      settings.PACLAB['NOISELESS_LLR'])
                cpscs, ladder = sets.cpscs, sets.pscs_ladder
            else:
                cpscs = cpscs_construct(cfg.n_bits, cfg.k_bits, cfg.info_set)
                ladder = None
        except ValueError as exc:
            return Response({'detail': str(exc)},
                            status=status.HTTP_400_BAD_REQUEST)

        payload = {'cpscs': [int(i) for i in cpscs]}
        if ladder is not None:
            payload['pscs_ladder'] = [[int(i) for i in entry]
                                      for entry in ladder]
        return Response(payload)
