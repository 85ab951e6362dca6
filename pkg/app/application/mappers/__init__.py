"""Mappers for converting between domain entities and DTOs"""
from .annotation_mapper import AnnotationMapper, DatasetExampleMapper
from .graph_mapper import GraphMapper
from .fusion_mapper import FusionMapper

__all__ = ["AnnotationMapper", "DatasetExampleMapper", "GraphMapper", "FusionMapper"]
