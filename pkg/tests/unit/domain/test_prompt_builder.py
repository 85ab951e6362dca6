import pytest

from app.domain.services.prompt_builder import (
    DEFAULT_INSTRUCTION,
    FUSED_NOTE,
    NO_ANSWER,
    PromptShot,
    PromptTarget,
    build_icl_prompt,
    instruction_line,
)


KNOX_CONTEXT = (
    "In the 1955 general election, Cunningham was chosen as the new Ulster Unionist MP for South Antrim. "
    "He was a delegate to the Council of Europe and Western European Union Parliamentary Assembly from 1956 to 1959."
)
KNOX_QUESTION = "Which position did Knox Cunningham hold before Apr 1956?"


@pytest.mark.unit
class TestPromptBuilder:
    def test_instruction_line(self):
        assert instruction_line(DEFAULT_INSTRUCTION, fused=False) == f"Instruction: {DEFAULT_INSTRUCTION}"
        assert instruction_line(DEFAULT_INSTRUCTION, fused=True).endswith(FUSED_NOTE)

    def test_layout(self):
        shot = PromptShot(KNOX_CONTEXT, KNOX_QUESTION, ["Ulster Unionist MP for South Antrim"])
        prompt = build_icl_prompt(DEFAULT_INSTRUCTION, [shot], PromptTarget("Some context.", "Who?"))

        blocks = prompt.split("\n\n")
        assert blocks[0] == f"Instruction: {DEFAULT_INSTRUCTION}"
        assert blocks[1] == (
            f"Context: {KNOX_CONTEXT}\nQuestion: {KNOX_QUESTION}\nAnswer: Ulster Unionist MP for South Antrim"
        )
        assert blocks[2] == "Context: Some context.\nQuestion: Who?\nAnswer:"

    def test_unanswerable_shot(self):
        shot = PromptShot("Broughton taught at Bryn Mawr College (1928-1965).", "Who employed him before Jun 1926?")
        assert shot.answer == NO_ANSWER
        assert "Answer: no answer" in build_icl_prompt("", [shot], PromptTarget("c", "q"))

    def test_empty_instruction_uses_default(self):
        prompt = build_icl_prompt("", [], PromptTarget("c", "q"), fused=True)
        assert prompt.startswith(f"Instruction: {DEFAULT_INSTRUCTION} {FUSED_NOTE}")

    def test_fused_shot_keeps_markers(self):
        shot = PromptShot(
            "In the <included by>1955</included by> general election.",
            "Which position did Knox Cunningham hold <question time>before Apr 1956</question time>?",
            ["Ulster Unionist MP for South Antrim"],
        )
        prompt = build_icl_prompt(DEFAULT_INSTRUCTION, [shot], PromptTarget("c", "q"), fused=True)
        assert "<question time>before Apr 1956</question time>" in prompt

    def test_eight_shots_give_eight_answers_and_one_cue(self):
        shots = [
            PromptShot(f"Context {n}.", f"Question {n}?", [f"answer {n}"] if n % 3 else [])
            for n in range(8)
        ]
        prompt = build_icl_prompt(DEFAULT_INSTRUCTION, shots, PromptTarget("Target context.", "Target?"))
        answer_lines = [line for line in prompt.splitlines() if line.startswith("Answer:")]

        assert len(answer_lines) == 9
        assert answer_lines[:8] == [f"Answer: {shot.answer}" for shot in shots]
        assert all(line != "Answer:" for line in answer_lines[:8])
        assert answer_lines[-1] == "Answer:"
        assert prompt.endswith("Question: Target?\nAnswer:")
        assert len(prompt.split("\n\n")) == 10
