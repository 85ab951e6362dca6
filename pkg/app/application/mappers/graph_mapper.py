"""Graph mapper - converts graphs and statistics to DTOs"""
from app.domain.entities.temporal_graph import TemporalGraph
from app.domain.services.graph_stats import CorpusStats
from app.application.dtos.response.record_dtos import EdgeDTO, GraphDumpDTO, NodeDTO
from app.application.dtos.response.run_report import CorpusStatsDTO


class GraphMapper:
    """Mapper for TemporalGraph and graph statistics"""

    @staticmethod
    def to_dump_dto(graph: TemporalGraph) -> GraphDumpDTO:
        return GraphDumpDTO(
            nodes=[
                NodeDTO(
                    id=node.id,
                    kind=node.kind.value,
                    start=node.char_start,
                    end=node.char_end,
                    surface=node.surface,
                    interval=str(node.interval) if node.interval is not None else None,
                )
                for node in graph.nodes
            ],
            edges=[
                EdgeDTO(src=e.src, dst=e.dst, relation=e.relation.value, provenance=e.provenance.value)
                for e in graph.edges
            ],
        )

    @staticmethod
    def to_stats_dto(stats: CorpusStats) -> CorpusStatsDTO:
        return CorpusStatsDTO(
            graphs=stats.graphs,
            avg_nodes=stats.avg_nodes,
            avg_edges=stats.avg_edges,
            avg_in_degree=stats.avg_in_degree,
            avg_out_degree=stats.avg_out_degree,
        )
