from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import APIView

from core.exceptions import W22Error


class ComputationView(APIView):
    """
    Read-only endpoint around one engine operation.

    Query parameters are validated by `query_serializer_class`; subclasses
    implement `compute(params)` and return a JSON-ready payload. Engine
    errors come back as HTTP 400 with the message and any structured data.
    """
    query_serializer_class = None

    def get(self, request, format=None):
        return self._respond(request.query_params)

    def _respond(self, data):
        serializer = self.query_serializer_class(data=data)
        if not serializer.is_valid():
            return Response(serializer.errors,
                            status=status.HTTP_400_BAD_REQUEST)
        try:
            payload = self.compute(serializer.validated_data)
        except W22Error as error:
            return Response(self._get_failure_response_payload(error),
                            status=status.HTTP_400_BAD_REQUEST)
        return Response(payload, status=status.HTTP_200_OK)

    def compute(self, params):
        raise NotImplementedError

    @staticmethod
    def _get_failure_response_payload(error):
        payload = {'error': str(error)}
        payload.update(error.details())
        return payload


class PostedComputationView(ComputationView):
    """Same as ComputationView, reading a JSON body instead of the query"""

    http_method_names = ['post', 'options']

    def post(self, request, format=None):
        return self._respond(request.data)
