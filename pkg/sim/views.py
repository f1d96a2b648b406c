from rest_framework import viewsets
from rest_framework.authentication import TokenAuthentication
from rest_framework.permissions import IsAuthenticated

from codec.views import int_query_param
from sim import serializers
from sim.models import Campaign


class CampaignViewSet(viewsets.ReadOnlyModelViewSet):
    """Browse recorded simulation campaigns"""
    authentication_classes = (TokenAuthentication,)
    permission_classes = (IsAuthenticated,)
    queryset = Campaign.objects.prefetch_related('points')
    serializer_class = serializers.CampaignSerializer

    def get_queryset(self):
        """Retrieve the campaigns for the authenticated user"""

        # campaigns of one profile, if given
        profile = int_query_param(self.request, 'profile')
        queryset = self.queryset
        if profile is not None:
            queryset = queryset.filter(profile__id=profile)

        return queryset.filter(user=self.request.user)
