import json
import os
import shutil
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from psum import constants
from psum.models import Counterexample, VerificationRun
from psum.tests.groups import fixture_path


def call(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def call_json(*args):
    return json.loads(call(*args, '--format', 'json'))


class CommandTestMixin:

    def assertExits(self, code, *args):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command(*args, stdout=out)
        self.assertEqual(ctx.exception.returncode, code)
        return out.getvalue()


class OrderCommandTest(CommandTestMixin, SimpleTestCase):

    def test_z25_json(self):
        data = call_json('order', '--group', 'Z25',
                         '--set', '1,3,4,-5,10,12')
        with open(fixture_path('order_z25.json')) as f:
            self.assertEqual(data, json.load(f))

    def test_z25_text(self):
        text = call('order', '--group', 'Z25', '--set', '1,3,4,-5,10,12')
        self.assertIn('partial sums: 1 5 8 3 13 0', text)
        self.assertIn('strategy: constructive (thm8/|A|=6)', text)

    def test_zero_free_in_z5(self):
        data = call_json('order', '--group', 'Z5', '--set', '1,2',
                         '--zero-free')
        self.assertEqual(data['status'], 'found')
        self.assertTrue(data['zero_free'])
        self.assertNotIn('0', data['partial_sums'])

    def test_sym3_has_no_zero_free_ordering(self):
        text = self.assertExits(
            constants.EXIT_NOT_FOUND, 'order',
            '--cayley', fixture_path('sym3.tbl'),
            '--set', 'all-nonidentity', '--zero-free')
        self.assertIn('no zero-free simple ordering: 120 orderings '
                      'exhausted', text)

    def test_builtin_sym3_json_certificate(self):
        out = StringIO()
        with self.assertRaises(CommandError):
            call_command('order', '--cayley', 'sym3', '--zero-free',
                         '--set', 'all-nonidentity', '--format', 'json',
                         stdout=out)
        data = json.loads(out.getvalue())
        self.assertEqual(data['status'], 'not_found')
        self.assertEqual(data['certificate']['search_space'], 120)
        self.assertIsNone(data['ordering'])

    def test_repeated_residue(self):
        self.assertExits(constants.EXIT_ERROR, 'order', '--group', 'Z7',
                         '--set', '1,8')

    def test_constructive_only(self):
        self.assertExits(constants.EXIT_ERROR, 'order', '--group', 'Z25',
                         '--set', '1,2,3,4,5,6', '--constructive-only')

    def test_needs_one_group(self):
        self.assertExits(constants.EXIT_ERROR, 'order', '--set', '1,2')


class VerifyCommandTest(CommandTestMixin, TestCase):

    def test_zero_sum_abelian_up_to_fifteen(self):
        data = call_json('verify', 'zero-sum', '--abelian-up-to', '15')
        self.assertEqual(data['counterexample_count'], 0)
        self.assertTrue(data['complete'])
        self.assertIn('timing', data)
        self.assertNotIn('elapsed', json.dumps(data['groups']))
        self.assertEqual(VerificationRun.objects.count(), 1)
        self.assertTrue(VerificationRun.objects.get().holds)

    def test_alspach_sym3_counterexample(self):
        text = self.assertExits(
            constants.EXIT_NOT_FOUND, 'verify', 'alspach',
            '--cayley', fixture_path('sym3.tbl'))
        self.assertIn(
            'counterexample in sym3: {1, 2, 3, 4, 5} '
            '(120 orderings exhausted)', text)
        self.assertEqual(Counterexample.objects.count(), 1)
        self.assertEqual(Counterexample.objects.get().subset,
                         [1, 2, 3, 4, 5])

    def test_adms_cyclic_without_record(self):
        text = call('verify', 'adms', '--cyclic-up-to', '10', '--no-record')
        self.assertIn('0 counterexamples', text)
        self.assertFalse(VerificationRun.objects.exists())

    def test_limit_order(self):
        data = call_json('verify', 'zero-sum', '--cyclic-up-to', '12',
                         '--limit-order', '6', '--no-record')
        self.assertEqual(len(data['groups']), 6)

    def test_list_runs(self):
        call('verify', 'zero-sum', '--cyclic-up-to', '6')
        text = call('verify', 'zero-sum', '--cyclic-up-to', '6',
                    '--list-runs')
        self.assertIn('cyclic_up_to(6): 0 counterexamples', text)
        self.assertIn('no recorded runs', call(
            'verify', 'zero-sum', '--cyclic-up-to', '7', '--list-runs'))

    def test_order_limit(self):
        self.assertExits(constants.EXIT_ERROR, 'verify', 'zero-sum',
                         '--cyclic-up-to', '40')

    def test_checkpoint_resume(self):
        tmp = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, tmp)
        path = os.path.join(tmp, 'adms.json')
        stopped = call_json('verify', 'adms', '--cyclic-up-to', '8',
                            '--budget', '0', '--checkpoint', path,
                            '--no-record')
        self.assertFalse(stopped['complete'])
        resumed = call_json('verify', 'adms', '--cyclic-up-to', '8',
                            '--checkpoint', path, '--no-record')
        self.assertTrue(resumed['complete'])
        self.assertEqual(resumed['examined'], sum(
            2 ** (n - 1) - 1 for n in range(1, 9)))


class HeffterCommandTest(CommandTestMixin, SimpleTestCase):

    def test_develop_d25_6(self):
        data = call_json('heffter', 'develop', fixture_path('d25-6.txt'))
        self.assertEqual(data['status'], 'decomposition')
        self.assertEqual(data['cycle_count'], 50)
        self.assertEqual(data['edges_covered'], 300)
        self.assertTrue(data['is_decomposition'])
        self.assertEqual(data['base']['cycles'],
                         [[1, 4, 8, 3, 13, 0], [2, 8, 15, 23, 14, 0]])

    def test_develop_writes_cycles(self):
        tmp = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, tmp)
        path = os.path.join(tmp, 'cycles.txt')
        call('heffter', 'develop', fixture_path('d13-3.txt'),
             '--cycles-out', path)
        with open(path) as f:
            self.assertEqual(len(f.read().splitlines()), 26)

    def test_find(self):
        data = call_json('heffter', 'validate', '--find', '7', '3')
        self.assertEqual(data['status'], 'valid')
        self.assertEqual(data['system']['parts'], [[1, 2, -3]])

    def test_find_impossible(self):
        self.assertExits(constants.EXIT_ERROR, 'heffter', 'validate',
                         '--find', '15', '3')

    def test_violation(self):
        text = self.assertExits(constants.EXIT_NOT_FOUND, 'heffter',
                                'validate', fixture_path('bad.txt'))
        self.assertIn('part sum is 3 mod 25 in part 1', text)

    def test_build(self):
        text = call('heffter', 'build', fixture_path('d13-3.txt'))
        self.assertIn('base cycles:', text)

    def test_needs_a_system(self):
        self.assertExits(1, 'heffter', 'build')

    def test_action_is_required(self):
        self.assertExits(constants.EXIT_ERROR, 'heffter',
                         fixture_path('d13-3.txt'))
        self.assertExits(constants.EXIT_ERROR, 'heffter', '--find', '7', '3')


class LengthsCommandTest(CommandTestMixin, SimpleTestCase):

    def test_realize_k11(self):
        data = call_json('lengths', 'realize', '11: 1^2 2 3 5^2')
        self.assertEqual(data['status'], 'found')
        self.assertEqual(data['witness']['lengths'], '11: 1^2 2 3 5^2')

    def test_k8_non_sufficiency(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('lengths', 'realize', '8: 3^4 4^4',
                         '--format', 'json', stdout=out)
        self.assertEqual(ctx.exception.returncode, constants.EXIT_NOT_FOUND)
        data = json.loads(out.getvalue())
        self.assertEqual(data['status'], 'not_found')
        self.assertTrue(data['conditions_passed'])

    def test_k8_text(self):
        text = self.assertExits(constants.EXIT_NOT_FOUND, 'lengths',
                                'realize', '8: 3^4 4^4')
        self.assertIn('all checked necessary conditions pass', text)

    def test_reduce(self):
        self.assertEqual(call('lengths', 'reduce', '20: 6^6 8^2'),
                         '10: 3^6 4^2\n')

    def test_path(self):
        text = call('lengths', 'realize', '6: 1^2 4^2 5', '--target', 'path')
        self.assertIn('signed steps', text)

    def test_check(self):
        data = call_json('lengths', 'check', '9: 3^4')
        rows = {row['condition']: row['passed'] for row in data['conditions']}
        self.assertFalse(rows['mpp'])

    def test_bad_list(self):
        self.assertExits(constants.EXIT_ERROR, 'lengths', 'check', '11 1 2')

    def test_modulus_below_two(self):
        self.assertExits(constants.EXIT_ERROR, 'lengths', 'check', '0: 1')


class AbelianGroupsCommandTest(SimpleTestCase):

    def test_up_to_eight(self):
        data = call_json('abelian_groups', '--up-to', '8')
        self.assertEqual(len(data['orders']), 8)
        self.assertEqual(data['orders'][7], {
            'order': 8, 'count': 3,
            'groups': ['Z8', 'Z2+Z4', 'Z2+Z2+Z2']})

    def test_text(self):
        self.assertIn('Z2+Z2', call('abelian_groups', '--up-to', '4'))
