from django.urls import reverse_lazy
from rest_framework import status
from rest_framework.test import APISimpleTestCase


class ChargeViewsTestSuite(APISimpleTestCase):
    def test_minimal_charge(self):
        response = self.client.get(reverse_lazy('minimal-charge'), {'c': '-22/5'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['pair'], [2, 5])
        response = self.client.get(reverse_lazy('minimal-charge'), {'c': '1'})
        self.assertIsNone(response.data['pair'])

    def test_sum_one(self):
        response = self.client.get(reverse_lazy('sum-one'), {'bound': 20})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['solutions'], [[[3, 4], [3, 4]]])

    def test_sum_one_bound_validation(self):
        response = self.client.get(reverse_lazy('sum-one'), {'bound': 3})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('bound', response.data)

    def test_sum_one_bound_is_capped(self):
        response = self.client.get(reverse_lazy('sum-one'), {'bound': 2001})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('bound', response.data)

    def test_orbit(self):
        response = self.client.get(reverse_lazy('orbit'))
        self.assertEqual(response.data['total'], 16)

    def test_noncongruent_rejects_invalid_pairs(self):
        response = self.client.get(reverse_lazy('noncongruent'), {'s': 4, 't': 6})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
