import factory.fuzzy

from psum import constants
from psum.heffter import HeffterSystem
from psum.models import Counterexample, VerificationRun, Witness
from psum.verifier import VerificationJob


class VerificationJobFactory(factory.Factory):

    class Meta:
        model = VerificationJob

    conjecture = constants.CONJECTURE_ZERO_SUM
    family = constants.FAMILY_CYCLIC
    limit = 7
    mode = constants.MODE_EXISTENCE


class HeffterSystemFactory(factory.Factory):
    """D(13, 3) unless told otherwise; not validated."""

    class Meta:
        model = HeffterSystem

    v = 13
    k = 3
    parts = ((1, 3, 9), (2, 5, 6))


class VerificationRunFactory(factory.django.DjangoModelFactory):

    class Meta:
        model = VerificationRun

    job_hash = factory.Faker('sha256')
    conjecture = factory.fuzzy.FuzzyChoice(
        [tup[0] for tup in constants.CONJECTURES])
    family = factory.LazyAttribute(
        lambda obj: 'cyclic_up_to({})'.format(
            factory.fuzzy.FuzzyChoice(range(3, 16)).fuzz()))
    complete = True
    counterexample_count = 0
    report = factory.LazyAttribute(
        lambda obj: {'conjecture': obj.conjecture, 'groups': []})


class CounterexampleFactory(factory.django.DjangoModelFactory):

    class Meta:
        model = Counterexample

    run = factory.SubFactory(VerificationRunFactory, counterexample_count=1)
    group = 'sym3'
    subset = [1, 2, 3, 4, 5]
    search_space = 120


class WitnessFactory(factory.django.DjangoModelFactory):

    class Meta:
        model = Witness

    run = factory.SubFactory(VerificationRunFactory)
    group = 'Z5'
    mask = factory.Sequence(lambda n: '{:x}'.format(n + 1))
    ordering = [1, 2]
