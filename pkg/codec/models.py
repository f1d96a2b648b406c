from django.conf import settings
from django.db import models
from django.utils.translation import gettext_lazy as _

from codec.coding import CodeConfig, ConvPolynomial


class StoredProfile(models.Model):
    """A named PAC rate profile owned by a user"""
    METHOD_CHOICES = (
        ('manual', _('Manual')),
        ('rm', _('Reed-Muller')),
        ('rm-polar', _('RM-polar')),
        ('ga', _('Polar (GA)')),
        ('ls', _('List search')),
        ('catalog', _('Catalog')),
    )

    user = models.ForeignKey(
        settings.AUTH_USER_MODEL,
        on_delete=models.CASCADE,
        related_name='profiles',
        verbose_name=_('User'))
    name = models.CharField(max_length=255)
    n_bits = models.PositiveIntegerField(_('N'))
    k_bits = models.PositiveIntegerField(_('K'))
    conv_poly = models.CharField(_('Polynomial (octal)'), max_length=32,
                                 default='3211')
    design_snr_db = models.FloatField(_('Design Eb/N0 (dB)'), null=True,
                                      blank=True)
    method = models.CharField(max_length=16, choices=METHOD_CHOICES,
                              default='manual')
    profile_hex = models.TextField(_('Rate profile (hex)'))
    created = models.DateTimeField(auto_now_add=True)

    class Meta:
        unique_together = ['user', 'name']
        ordering = ['name']

    def __str__(self):
        return self.name

    def code_config(self):
        return CodeConfig.from_hex(self.profile_hex, self.n_bits,
                                   ConvPolynomial.from_octal(self.conv_poly))
