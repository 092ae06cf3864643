from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='CacheHeader',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('system', models.CharField(max_length=8, unique=True)),
                ('format_version', models.PositiveIntegerField(default=1)),
                ('normalization', models.CharField(default='w2-bourbaki;long-roots-2', max_length=64)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
        ),
        migrations.CreateModel(
            name='CacheRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('system', models.CharField(db_index=True, max_length=8)),
                ('kind', models.CharField(choices=[('decomp', 'Orbit product decomposition'), ('m2tau', 'Orbit function in τ'), ('coeffA', 'A coefficient'), ('coeffC', 'c coefficient'), ('hint', 'Reflection-string expansion')], max_length=8)),
                ('key', models.CharField(max_length=255)),
                ('payload', models.TextField()),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['system', 'kind', 'key'],
                'unique_together': {('system', 'kind', 'key')},
            },
        ),
    ]
