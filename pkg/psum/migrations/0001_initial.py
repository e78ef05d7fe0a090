from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('job_hash', models.CharField(db_index=True, max_length=64)),
                ('conjecture', models.CharField(choices=[('alspach', 'Alspach: distinct nonzero partial sums, sum(A) != 0'), ('adms', 'ADMS: distinct partial sums'), ('zero_sum', 'Zero-sum: distinct partial sums, sum(A) = 0, no inverse pair')], max_length=16)),
                ('family', models.CharField(max_length=512)),
                ('complete', models.BooleanField(default=False)),
                ('counterexample_count', models.IntegerField(default=0)),
                ('report', models.JSONField(default=dict)),
                ('date_created', models.DateTimeField(auto_now_add=True)),
                ('date_updated', models.DateTimeField(auto_now=True)),
            ],
            options={
                'ordering': ['id'],
            },
        ),
        migrations.CreateModel(
            name='Counterexample',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('group', models.CharField(max_length=128)),
                ('subset', models.JSONField(default=list)),
                ('search_space', models.BigIntegerField()),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='counterexamples', to='psum.verificationrun')),
            ],
            options={
                'ordering': ['id'],
            },
        ),
        migrations.CreateModel(
            name='Witness',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('group', models.CharField(max_length=128)),
                ('mask', models.CharField(max_length=64)),
                ('ordering', models.JSONField(default=list)),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='witnesses', to='psum.verificationrun')),
            ],
            options={
                'ordering': ['id'],
                'unique_together': {('run', 'group', 'mask')},
            },
        ),
    ]
