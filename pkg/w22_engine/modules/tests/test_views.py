from django.urls import reverse_lazy
from rest_framework import status
from rest_framework.test import APISimpleTestCase


class GramViewTestSuite(APISimpleTestCase):
    url = reverse_lazy('gram')

    def test_get_gram_matrix(self):
        response = self.client.get(
            self.url, {'c': '1', 'h1': '1', 'h2': '1', 'level': 1})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['determinant'], '-4/1')

    def test_vacuum_needs_zero_weights(self):
        response = self.client.get(
            self.url, {'c': '1', 'h1': '1', 'level': 2, 'vacuum': 'true'})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('error', response.data)

    def test_decimal_charge(self):
        response = self.client.get(self.url, {'c': '0.5', 'level': 1})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('c', response.data)

    def test_level_is_capped(self):
        response = self.client.get(self.url, {'c': '1', 'level': 30})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('level', response.data)


class IrreducibleViewTestSuite(APISimpleTestCase):
    url = reverse_lazy('irreducible')

    def test_witness(self):
        response = self.client.get(self.url, {'c': '1/2', 'h2': '-1/16'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['witness_m'], 2)


class BasisViewTestSuite(APISimpleTestCase):
    url = reverse_lazy('basis')

    def test_vacuum_basis(self):
        response = self.client.get(self.url, {'level': 4, 'vacuum': 'true'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['dimension'], 5)
