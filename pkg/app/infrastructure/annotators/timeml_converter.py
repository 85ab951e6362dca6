"""
TimeML reader producing annotated documents

Reads inline EVENT / TIMEX3 elements of the TEXT element and the TLINK
elements of the document. Relation types are mapped onto the six-relation
vocabulary:

    BEFORE, IBEFORE                             -> BEFORE
    AFTER, IAFTER                               -> AFTER
    INCLUDES, DURING_INV, BEGUN_BY, ENDED_BY    -> INCLUDES
    IS_INCLUDED, DURING, BEGINS, ENDS           -> INCLUDED_BY
    SIMULTANEOUS, IDENTITY                      -> SIMULTANEOUS
    OVERLAP                                     -> OVERLAP

VAGUE, disjunctive TempEval labels and anything else are dropped and counted,
as are links to mentions outside TEXT (e.g. the document creation time).
"""
import logging
import xml.etree.ElementTree as ET
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from app.core.exceptions import DatasetParseError
from app.domain.entities.annotated_document import (
    AnnotatedDocument,
    EventAnnotation,
    TimeLinkAnnotation,
    TimexAnnotation,
)
from app.domain.value_objects import TemporalRelation


logger = logging.getLogger("tempograph.timeml")

TIMEML_RELATION_MAP: Dict[str, TemporalRelation] = {
    "BEFORE": TemporalRelation.BEFORE,
    "IBEFORE": TemporalRelation.BEFORE,
    "AFTER": TemporalRelation.AFTER,
    "IAFTER": TemporalRelation.AFTER,
    "INCLUDES": TemporalRelation.INCLUDES,
    "DURING_INV": TemporalRelation.INCLUDES,
    "BEGUN_BY": TemporalRelation.INCLUDES,
    "ENDED_BY": TemporalRelation.INCLUDES,
    "IS_INCLUDED": TemporalRelation.INCLUDED_BY,
    "DURING": TemporalRelation.INCLUDED_BY,
    "BEGINS": TemporalRelation.INCLUDED_BY,
    "ENDS": TemporalRelation.INCLUDED_BY,
    "SIMULTANEOUS": TemporalRelation.SIMULTANEOUS,
    "IDENTITY": TemporalRelation.SIMULTANEOUS,
    "OVERLAP": TemporalRelation.OVERLAP,
}

OUTSIDE_TEXT = "OUTSIDE_TEXT"


@dataclass
class TimeMLConversion:
    """One converted document and what had to be left out"""
    doc_id: str
    document: AnnotatedDocument
    dropped: Counter = field(default_factory=Counter)


class TimeMLConverter:
    """TimeML XML to AnnotatedDocument"""

    def __init__(self, relation_map: Optional[Dict[str, TemporalRelation]] = None):
        self.relation_map = relation_map or TIMEML_RELATION_MAP

    def convert_file(self, path: str | Path) -> TimeMLConversion:
        """
        Raises:
            DatasetParseError: file is not well-formed XML or has no TEXT element
        """
        path = Path(path)
        try:
            root = ET.parse(path).getroot()
        except (ET.ParseError, OSError) as e:
            raise DatasetParseError(str(path), None, f"cannot parse TimeML ({e})")
        return self._convert(root, default_id=path.stem, source=str(path))

    def convert_string(self, xml: str, doc_id: str = "doc") -> TimeMLConversion:
        try:
            root = ET.fromstring(xml)
        except ET.ParseError as e:
            raise DatasetParseError(doc_id, None, f"cannot parse TimeML ({e})")
        return self._convert(root, default_id=doc_id, source=doc_id)

    def _read_text(self, text_elem: ET.Element) -> Tuple[str, List[EventAnnotation], List[TimexAnnotation], Dict[str, int], Dict[str, int]]:
        pieces: List[str] = []
        events: List[EventAnnotation] = []
        timexes: List[TimexAnnotation] = []
        event_index: Dict[str, int] = {}
        timex_index: Dict[str, int] = {}
        length = 0

        def append(piece: Optional[str]) -> None:
            nonlocal length
            if piece:
                pieces.append(piece)
                length += len(piece)

        def visit(elem: ET.Element) -> None:
            append(elem.text)
            for child in elem:
                if child.tag in ("EVENT", "TIMEX3"):
                    surface = "".join(child.itertext())
                    start = length
                    append(surface)
                    if child.tag == "EVENT" and surface:
                        event_index[child.attrib.get("eid", f"e{len(events)}")] = len(events)
                        events.append(EventAnnotation(start, length, surface))
                    elif surface:
                        timex_index[child.attrib.get("tid", f"t{len(timexes)}")] = len(timexes)
                        timexes.append(TimexAnnotation(start, length, surface, child.attrib.get("value")))
                else:
                    visit(child)
                append(child.tail)

        visit(text_elem)
        return "".join(pieces), events, timexes, event_index, timex_index

    def _convert(self, root: ET.Element, default_id: str, source: str) -> TimeMLConversion:
        text_elem = next(root.iter("TEXT"), None)
        if text_elem is None:
            raise DatasetParseError(source, None, "no TEXT element")
        doc_elem = next((e for e in root.iter() if e.tag in ("DOCID", "DOCNO")), None)
        doc_id = (doc_elem.text or "").strip() if doc_elem is not None else ""
        doc_id = doc_id or default_id

        text, events, timexes, event_index, timex_index = self._read_text(text_elem)
        instances = {
            inst.attrib["eiid"]: inst.attrib.get("eventID")
            for inst in root.iter("MAKEINSTANCE")
            if "eiid" in inst.attrib
        }

        def annotation_index(attrib: Dict[str, str], event_key: str, time_key: str) -> Optional[int]:
            if event_key in attrib:
                eid = instances.get(attrib[event_key], attrib[event_key])
                return event_index.get(eid)
            if time_key in attrib and attrib[time_key] in timex_index:
                return len(events) + timex_index[attrib[time_key]]
            return None

        dropped: Counter = Counter()
        tlinks: List[TimeLinkAnnotation] = []
        seen = set()
        for link in root.iter("TLINK"):
            label = link.attrib.get("relType", "").upper()
            relation = self.relation_map.get(label)
            if relation is None:
                dropped[label or "MISSING"] += 1
                continue
            source_index = annotation_index(link.attrib, "eventInstanceID", "timeID")
            target_index = annotation_index(link.attrib, "relatedToEventInstance", "relatedToTime")
            if source_index is None or target_index is None or source_index == target_index:
                dropped[OUTSIDE_TEXT] += 1
                continue
            key = (source_index, target_index, relation)
            if key in seen:
                continue
            seen.add(key)
            tlinks.append(TimeLinkAnnotation(source_index, target_index, relation.value))

        if dropped:
            logger.info(f"{doc_id}: dropped tlinks {dict(sorted(dropped.items()))}")
        document = AnnotatedDocument(text=text, events=events, timexes=timexes, tlinks=tlinks)
        return TimeMLConversion(doc_id=doc_id, document=document, dropped=dropped)
