"""Document annotators (adapters for the DocumentAnnotator port)"""
from .chronon_stub_annotator import ChrononStubAnnotator
from .timeml_converter import TimeMLConverter, TimeMLConversion, TIMEML_RELATION_MAP

__all__ = ["ChrononStubAnnotator", "TimeMLConverter", "TimeMLConversion", "TIMEML_RELATION_MAP"]
