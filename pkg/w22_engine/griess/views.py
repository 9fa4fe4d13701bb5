from core.views import PostedComputationView
from griess.classification import classify
from griess.pipeline import characterization_pipeline
from griess.serializers import (
    ClassifySerializer, PipelineSerializer, classification_payload,
)


class ClassifyView(PostedComputationView):
    query_serializer_class = ClassifySerializer

    def compute(self, params):
        algebra = params['algebra']
        return classification_payload(algebra, classify(algebra, params['c']))


class PipelineView(PostedComputationView):
    """Runs the characterization on posted hypotheses and Griess data"""
    query_serializer_class = PipelineSerializer

    def compute(self, params):
        return characterization_pipeline(
            params['c'], params['c_tilde'], params['dim_v1'], params['dim_v2'],
            params['algebra']).to_record()
