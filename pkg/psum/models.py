from django.db import models, transaction

import psum.constants as constants


class VerificationRunManager(models.Manager):

    def for_job(self, job_hash):
        return self.filter(job_hash=job_hash).order_by('-date_created')

    @transaction.atomic
    def record(self, report, rendered):
        """Store a finished or budget-stopped run with its outcomes."""
        job = report.job
        run = self.create(
            job_hash=job.job_hash,
            conjecture=job.conjecture,
            family=job.family_label,
            complete=report.complete,
            counterexample_count=len(report.counterexamples),
            report=rendered,
        )
        Counterexample.objects.bulk_create(
            Counterexample(
                run=run,
                group=c.group_id,
                subset=list(c.items),
                search_space=c.search_space,
            )
            for c in report.counterexamples
        )
        Witness.objects.bulk_create(
            Witness(
                run=run,
                group=w['group'],
                mask=w['mask'],
                ordering=w['ordering'],
            )
            for group in report.groups for w in group.stored
        )
        return run


class VerificationRun(models.Model):
    job_hash = models.CharField(max_length=64, db_index=True)
    conjecture = models.CharField(
        choices=constants.CONJECTURES,
        max_length=16
    )
    family = models.CharField(max_length=512)
    complete = models.BooleanField(default=False)
    counterexample_count = models.IntegerField(default=0)
    report = models.JSONField(default=dict)
    date_created = models.DateTimeField(auto_now_add=True)
    date_updated = models.DateTimeField(auto_now=True)

    objects = VerificationRunManager()

    class Meta:
        ordering = ['id']

    @property
    def holds(self):
        return self.complete and not self.counterexample_count

    def __str__(self):
        return '{} on {} ({})'.format(
            self.conjecture, self.family,
            'complete' if self.complete else 'partial')


class Counterexample(models.Model):
    run = models.ForeignKey(VerificationRun, related_name='counterexamples',
                            on_delete=models.CASCADE)
    group = models.CharField(max_length=128)
    subset = models.JSONField(default=list)
    search_space = models.BigIntegerField()

    class Meta:
        ordering = ['id']

    def __str__(self):
        return 'Counterexample in %s: %s' % (self.group, self.subset)


class Witness(models.Model):
    run = models.ForeignKey(VerificationRun, related_name='witnesses',
                            on_delete=models.CASCADE)
    group = models.CharField(max_length=128)
    # characteristic vector of the subset over element indices, in hex
    mask = models.CharField(max_length=64)
    ordering = models.JSONField(default=list)

    class Meta:
        ordering = ['id']
        unique_together = ('run', 'group', 'mask')

    def __str__(self):
        return 'Witness in %s for %s' % (self.group, self.mask)
