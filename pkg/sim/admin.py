from django.contrib import admin

from .models import Campaign, CampaignPoint


class CampaignPointInline(admin.TabularInline):
    model = CampaignPoint
    extra = 0


@admin.register(Campaign)
class CampaignAdmin(admin.ModelAdmin):
    list_filter = ['decoder']
    list_display = ['profile', 'decoder', 'list_size', 'seed', 'created']
    search_fields = ['profile__name']
    inlines = [CampaignPointInline]
