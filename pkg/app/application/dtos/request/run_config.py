"""Run Config DTO"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from app.domain.entities.temporal_graph import GraphVariant
from app.domain.services.prompt_builder import DEFAULT_INSTRUCTION


class FusionMode(str, Enum):
    """Output produced by a run; exactly one per run"""
    ERR = "err"
    GNN = "gnn"
    PROMPT = "prompt"


class RunConfig(BaseModel):
    """
    Options for one pipeline run

    Defaults come from Settings; command-line flags override them.
    """
    dataset_path: str = Field(..., min_length=1)
    out_dir: str = Field(..., min_length=1)
    annotations_dir: Optional[str] = None
    variant: GraphVariant = GraphVariant.DT2QT
    mode: FusionMode = FusionMode.ERR
    merge3: bool = False
    padded: bool = Field(False, description="Space-padded delimiters")
    workers: int = Field(1, ge=1, le=256)
    context_char_budget: Optional[int] = Field(None, ge=1, description="Truncate contexts to this many characters")
    composition_table_path: Optional[str] = None
    shots_path: Optional[str] = Field(None, description="Dataset file with few-shot demonstrations")
    fused_prompt: bool = Field(True, description="Use fused text inside prompts")
    instruction: str = DEFAULT_INSTRUCTION

    @model_validator(mode="after")
    def validate_mode_options(self):
        if self.shots_path and self.mode != FusionMode.PROMPT:
            raise ValueError("Shots are only used in prompt mode")
        return self
