import logging

from django.db import transaction

from codec.models import StoredProfile
from sim.models import Campaign, CampaignPoint
from spectrum.weights import union_bound

logger = logging.getLogger(__name__)


def stored_profile_for(user, code, design_snr_db=None, name=None):
    """The user's stored profile of `code`, created when missing"""
    profile_hex = code.profile.to_hex()
    octal = code.conv_poly.octal_repr
    existing = StoredProfile.objects.filter(
        user=user, n_bits=code.n_bits, k_bits=code.k_bits, conv_poly=octal,
        profile_hex=profile_hex).first()
    if existing:
        return existing
    return StoredProfile.objects.create(
        user=user,
        name=name or f'PAC({code.n_bits},{code.k_bits}) g={octal} '
                     f'{profile_hex[:8]}',
        n_bits=code.n_bits,
        k_bits=code.k_bits,
        conv_poly=octal,
        design_snr_db=design_snr_db,
        method='manual',
        profile_hex=profile_hex,
    )


@transaction.atomic
def record_campaign(user, cfg, records, spectrum=None, design_snr_db=None):
    profile = stored_profile_for(user, cfg.code, design_snr_db)
    decoder = cfg.decoder
    campaign = Campaign.objects.create(
        user=user,
        profile=profile,
        decoder=decoder.kind,
        list_size=decoder.list_size,
        delta=decoder.delta if decoder.kind == 'fano' else None,
        split_set='' if decoder.split_set is None
        else ' '.join(str(i) for i in decoder.split_set)[:255],
        seed=cfg.seed,
        min_frame_errors=cfg.min_frame_errors,
        max_frames=cfg.max_frames,
    )
    CampaignPoint.objects.bulk_create([
        CampaignPoint(
            campaign=campaign,
            snr_db=record.snr_db,
            frames=record.frames,
            frame_errors=record.frame_errors,
            bler=record.bler,
            mean_anv=record.mean_anv,
            mean_sort_ops=record.mean_sort_ops,
            wall_time=record.wall_time,
            budget_exhausted=record.budget_exhausted,
            union_bound=union_bound(spectrum, cfg.code.rate, record.snr_db)
            if spectrum else None,
        )
        for record in records
    ])
    logger.info('recorded campaign %d (%d points) for %s', campaign.id,
                len(records), user)
    return campaign
