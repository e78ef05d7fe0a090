from django.apps import apps
from django.conf import settings
from django.db import IntegrityError
from django.test import SimpleTestCase, TestCase

from psum import constants
from psum.factories import (
    CounterexampleFactory, VerificationJobFactory, VerificationRunFactory,
    WitnessFactory,
)
from psum.models import VerificationRun, Witness
from psum.serializers import (
    VerificationReportSerializer, VerificationRunSerializer,
)
from psum.tests.verifier import create_sym3_job
from psum.verifier import run_verification


def create_run(job):
    report = run_verification(job)
    data = VerificationReportSerializer(report).data
    return report, VerificationRun.objects.record(report, data)


class VerificationRunTest(TestCase):

    def test_record_counterexample(self):
        report, run = create_run(create_sym3_job())
        self.assertEqual(run.counterexample_count, 1)
        self.assertFalse(run.holds)
        counterexample = run.counterexamples.get()
        self.assertEqual(counterexample.group, 'sym3')
        self.assertEqual(counterexample.search_space, 120)
        self.assertEqual(run.report['counterexample_count'], 1)
        self.assertEqual(run.job_hash, report.job.job_hash)

    def test_record_witnesses(self):
        job = VerificationJobFactory(limit=5,
                                     mode=constants.MODE_STORE_WITNESSES)
        report, run = create_run(job)
        stored = sum(len(g.stored) for g in report.groups)
        self.assertGreater(stored, 0)
        self.assertEqual(run.witnesses.count(), stored)
        self.assertTrue(run.holds)

    def test_for_job(self):
        job = VerificationJobFactory(limit=4)
        first = create_run(job)[1]
        second = create_run(job)[1]
        create_run(VerificationJobFactory(limit=3))
        runs = VerificationRun.objects.for_job(job.job_hash)
        self.assertEqual(set(runs), {first, second})
        self.assertEqual(VerificationRun.objects.count(), 3)

    def test_partial_run_does_not_hold(self):
        run = VerificationRunFactory(complete=False)
        self.assertFalse(run.holds)
        self.assertIn('partial', str(run))

    def test_serializer(self):
        counterexample = CounterexampleFactory()
        data = VerificationRunSerializer(counterexample.run).data
        self.assertEqual(data['counterexample_count'], 1)
        self.assertEqual(data['counterexamples'], [
            {'group': 'sym3', 'subset': [1, 2, 3, 4, 5],
             'search_space': 120}])


class WitnessTest(TestCase):

    def test_mask_is_unique_per_run(self):
        witness = WitnessFactory()
        with self.assertRaises(IntegrityError):
            Witness.objects.create(run=witness.run, group=witness.group,
                                   mask=witness.mask, ordering=[2, 1])

    def test_str(self):
        witness = WitnessFactory(mask='6')
        self.assertEqual(str(witness), 'Witness in Z5 for 6')


class InstalledAppsTest(SimpleTestCase):

    def test_no_auth_stack(self):
        self.assertFalse(apps.is_installed('django.contrib.auth'))
        self.assertEqual(set(settings.REST_FRAMEWORK),
                         {'DEFAULT_RENDERER_CLASSES'})
