from django.contrib import admin

from .models import StoredProfile


@admin.register(StoredProfile)
class StoredProfileAdmin(admin.ModelAdmin):
    ordering = ('n_bits', 'k_bits', 'name')
    list_filter = ['method', 'n_bits', 'conv_poly']
    list_display = ['name', 'n_bits', 'k_bits', 'conv_poly', 'design_snr_db',
                    'method']
    search_fields = ['name', 'user__username']
