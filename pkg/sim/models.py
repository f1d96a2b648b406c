from django.conf import settings
from django.db import models
from django.utils.translation import gettext_lazy as _

from codec.models import StoredProfile


class Campaign(models.Model):
    """A recorded Monte-Carlo run of one decoder over an SNR grid"""
    user = models.ForeignKey(
        settings.AUTH_USER_MODEL,
        on_delete=models.CASCADE,
        related_name='campaigns',
        verbose_name=_('User'))
    profile = models.ForeignKey(
        StoredProfile,
        on_delete=models.PROTECT,
        related_name='campaigns',
        verbose_name=_('Profile'))
    decoder = models.CharField(max_length=16)
    list_size = models.PositiveIntegerField(default=1)
    delta = models.FloatField(null=True, blank=True)
    split_set = models.CharField(_('Split set'), max_length=255, blank=True)
    seed = models.BigIntegerField(default=0)
    min_frame_errors = models.PositiveIntegerField(default=100)
    max_frames = models.BigIntegerField(default=10_000_000)
    created = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created', '-id']

    def __str__(self):
        return f'{self.profile} / {self.decoder}'


class CampaignPoint(models.Model):
    """Statistics of one SNR point"""
    campaign = models.ForeignKey(
        Campaign,
        on_delete=models.CASCADE,
        related_name='points',
        verbose_name=_('Campaign'))
    snr_db = models.FloatField(_('Eb/N0 (dB)'))
    frames = models.BigIntegerField()
    frame_errors = models.BigIntegerField()
    bler = models.FloatField()
    mean_anv = models.FloatField()
    mean_sort_ops = models.FloatField()
    wall_time = models.FloatField(default=0.0)
    budget_exhausted = models.BigIntegerField(default=0)
    union_bound = models.FloatField(null=True, blank=True)

    class Meta:
        unique_together = ['campaign', 'snr_db']
        ordering = ['snr_db']

    def __str__(self):
        return f'{self.snr_db:g} dB'
