import json
import os

from django.core.management.base import CommandError
from django.test import SimpleTestCase
from django.urls import reverse_lazy
from rest_framework import status
from rest_framework.test import APISimpleTestCase

from core.tests.testing_utils import run_command
from factories.factories import IsingSquareGriessFactory, RadicalGriessFactory


FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                        'fixtures')
ISING_SQUARE = os.path.join(FIXTURES, 'ising_square.json')
RADICAL = os.path.join(FIXTURES, 'radical.json')


class ClassifyCommandTestSuite(SimpleTestCase):
    def test_radical_fixture(self):
        payload = run_command('classify', '--input', RADICAL, '--c', '1')['payload']
        self.assertEqual(payload['verdict']['label'], 'Radical(1)')
        self.assertEqual(payload['radical'], {'dimension': 1, 'vector': ['0/1', '1/1']})

    def test_ising_square_fixture(self):
        document = run_command('classify', '--input', ISING_SQUARE, '--c', '1')
        self.assertEqual(document['payload']['verdict']['label'], 'Semisimple(1/2,1/2)')
        self.assertEqual(document['command'],
                         {'name': 'classify', 'options': {'input': ISING_SQUARE, 'c': '1/1'}})

    def test_fixtures_match_the_factories(self):
        with open(ISING_SQUARE, encoding='utf-8') as handle:
            ising_square = json.load(handle)
        payload = run_command('classify', '--input', ISING_SQUARE, '--c', '1')['payload']
        self.assertEqual(payload['algebra'], IsingSquareGriessFactory().to_record())
        self.assertEqual(ising_square['basis'], ['f1', 'f2'])

    def test_zero_central_charge(self):
        with self.assertRaises(CommandError) as context:
            run_command('classify', '--input', RADICAL, '--c', '0')
        self.assertEqual(context.exception.returncode, 3)

    def test_missing_file(self):
        with self.assertRaises(CommandError) as context:
            run_command('classify', '--input', os.path.join(FIXTURES, 'missing.json'), '--c', '1')
        self.assertEqual(context.exception.returncode, 2)


class PipelineCommandTestSuite(SimpleTestCase):
    def test_ising_square(self):
        payload = run_command('pipeline', '--input', ISING_SQUARE)['payload']
        self.assertEqual(payload['verdict'], 'isomorphic to L(1/2,0)⊗L(1/2,0)')
        self.assertEqual(payload['modules'], [['0/1', '0/1'], ['1/2', '1/2']])

    def test_radical(self):
        payload = run_command('pipeline', '--input', RADICAL)['payload']
        self.assertEqual(payload['verdict'], 'excluded by growth contradiction')

    def test_hypotheses(self):
        document = run_command('pipeline', '--input', RADICAL, '--c', '2', '--c-tilde', '2')
        payload = document['payload']
        self.assertEqual(payload['verdict'], 'hypotheses not met: c ≠ 1')


class GriessViewsTestSuite(APISimpleTestCase):
    def test_classify(self):
        response = self.client.post(
            reverse_lazy('classify'),
            {'algebra': RadicalGriessFactory().to_record(), 'c': '1'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['verdict']['kind'], 'radical')

    def test_invalid_algebra(self):
        record = RadicalGriessFactory().to_record()
        record['form'] = [['1/4', '1/2'], ['1/2', '1']]
        response = self.client.post(reverse_lazy('classify'),
                                    {'algebra': record, 'c': '1'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('invariant form', str(response.data['algebra']))

    def test_zero_central_charge(self):
        response = self.client.post(
            reverse_lazy('classify'),
            {'algebra': RadicalGriessFactory().to_record(), 'c': '0'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('error', response.data)

    def test_pipeline(self):
        response = self.client.post(
            reverse_lazy('pipeline'),
            {'algebra': IsingSquareGriessFactory().to_record(), 'dim_v2': 3}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['verdict'], 'hypotheses not met: dim V2 ≠ 2')

    def test_pipeline_rejects_get(self):
        response = self.client.get(reverse_lazy('pipeline'))
        self.assertEqual(response.status_code, status.HTTP_405_METHOD_NOT_ALLOWED)
