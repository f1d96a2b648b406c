from django.conf import settings
from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = [
        migrations.swappable_dependency(settings.AUTH_USER_MODEL),
    ]

    operations = [
        migrations.CreateModel(
            name='StoredProfile',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('name', models.CharField(max_length=255)),
                ('n_bits', models.PositiveIntegerField(verbose_name='N')),
                ('k_bits', models.PositiveIntegerField(verbose_name='K')),
                ('conv_poly', models.CharField(default='3211', max_length=32, verbose_name='Polynomial (octal)')),
                ('design_snr_db', models.FloatField(blank=True, null=True, verbose_name='Design Eb/N0 (dB)')),
                ('method', models.CharField(choices=[('manual', 'Manual'), ('rm', 'Reed-Muller'), ('rm-polar', 'RM-polar'), ('ga', 'Polar (GA)'), ('ls', 'List search'), ('catalog', 'Catalog')], default='manual', max_length=16)),
                ('profile_hex', models.TextField(verbose_name='Rate profile (hex)')),
                ('created', models.DateTimeField(auto_now_add=True)),
                ('user', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='profiles', to=settings.AUTH_USER_MODEL, verbose_name='User')),
            ],
            options={
                'ordering': ['name'],
                'unique_together': {('user', 'name')},
            },
        ),
    ]
