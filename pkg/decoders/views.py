from django.conf import settings
from rest_framework import generics, status
from rest_framework.authentication import TokenAuthentication
from rest_framework.permissions import IsAuthenticated
from rest_framework.response import Response

from decoders import serializers
from decoders.factory import make_decoder


class DecodeView(generics.GenericAPIView):
    """Decode one frame of channel LLRs with a stored code"""
    authentication_classes = (TokenAuthentication,)
    permission_classes = (IsAuthenticated,)
    serializer_class = serializers.DecodeSerializer

    def post(self, request):
        serializer = self.get_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        try:
            decode = make_decoder(
                data['profile'].code_config(),
                data['decoder'],
                list_size=data['list_size'],
                split_set=data.get('split_set'),
                delta=data['delta'],
                max_visits=data['max_visits'],
                snr_db=data.get('snr_db'),
                min_sum=data['min_sum'],
                llr_clamp=settings.PACLAB['LLR_CLAMP'],
            )
            result = decode(data['llrs'])
        except ValueError as exc:
            return Response({'detail': str(exc)},
                            status=status.HTTP_400_BAD_REQUEST)
        return Response(result.as_dict())
