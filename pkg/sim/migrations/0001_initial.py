from django.conf import settings
from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = [
        migrations.swappable_dependency(settings.AUTH_USER_MODEL),
        ('codec', '0001_initial'),
    ]

    operations = [
        migrations.CreateModel(
            name='Campaign',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('decoder', models.CharField(max_length=16)),
                ('list_size', models.PositiveIntegerField(default=1)),
                ('delta', models.FloatField(blank=True, null=True)),
                ('split_set', models.CharField(blank=True, max_length=255, verbose_name='Split set')),
                ('seed', models.BigIntegerField(default=0)),
                ('min_frame_errors', models.PositiveIntegerField(default=100)),
                ('max_frames', models.BigIntegerField(default=10000000)),
                ('created', models.DateTimeField(auto_now_add=True)),
                ('profile', models.ForeignKey(on_delete=django.db.models.deletion.PROTECT, related_name='campaigns', to='codec.storedprofile', verbose_name='Profile')),
                ('user', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='campaigns', to=settings.AUTH_USER_MODEL, verbose_name='User')),
            ],
            options={
                'ordering': ['-created', '-id'],
            },
        ),
        migrations.CreateModel(
            name='CampaignPoint',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('snr_db', models.FloatField(verbose_name='Eb/N0 (dB)')),
                ('frames', models.BigIntegerField()),
                ('frame_errors', models.BigIntegerField()),
                ('bler', models.FloatField()),
                ('mean_anv', models.FloatField()),
                ('mean_sort_ops', models.FloatField()),
                ('wall_time', models.FloatField(default=0.0)),
                ('budget_exhausted', models.BigIntegerField(default=0)),
                ('union_bound', models.FloatField(blank=True, null=True)),
                ('campaign', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='points', to='sim.campaign', verbose_name='Campaign')),
            ],
            options={
                'ordering': ['snr_db'],
                'unique_together': {('campaign', 'snr_db')},
            },
        ),
    ]
