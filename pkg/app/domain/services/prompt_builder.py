"""In-context learning prompt assembly"""
from dataclasses import dataclass, field
from typing import List, Sequence


DEFAULT_INSTRUCTION = 'Answer the question based on the given context. If there is no answer, answer "no answer."'
FUSED_NOTE = (
    "The temporal relations between the times mentioned in the context and the question "
    "are represented using XML-style tags."
)
NO_ANSWER = "no answer"


@dataclass(frozen=True)
class PromptShot:
    """A solved demonstration; empty answers mean unanswerable"""
    context: str
    question: str
    answers: List[str] = field(default_factory=list)

    @property
    def answer(self) -> str:
        return self.answers[0] if self.answers else NO_ANSWER


@dataclass(frozen=True)
class PromptTarget:
    context: str
    question: str


def instruction_line(instruction: str, fused: bool) -> str:
    text = instruction.strip()
    if fused:
        text = f"{text} {FUSED_NOTE}"
    return f"Instruction: {text}"


def build_icl_prompt(
    instruction: str,
    shots: Sequence[PromptShot],
    target: PromptTarget,
    fused: bool = False,
) -> str:
    """
    Instruction, then one Context/Question/Answer block per shot, then the
    target's Context/Question with an empty Answer cue. Blocks are separated by
    blank lines.
    """
    blocks = [instruction_line(instruction or DEFAULT_INSTRUCTION, fused)]
    for shot in shots:
        blocks.append(f"Context: {shot.context}\nQuestion: {shot.question}\nAnswer: {shot.answer}")
    blocks.append(f"Context: {target.context}\nQuestion: {target.question}\nAnswer:")
    return "\n\n".join(blocks)
