"""검증 스윕 결과 데이터 타입 정의 모듈.

유한 범위 전수 검증(shift, lemma3, theorem1, theorem2, lemma4, lemma5)이
공통으로 반환하는 보고서와 반례 레코드를 Pydantic 모델로 관리한다.
스윕은 반례를 만나도 예외를 던지지 않고 이 모델에 모아 반환한다.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field


class Counterexample(BaseModel):
    """검증 중 발견된 단일 반례.

    Attributes:
        params: 반례를 재현하는 매개변수 (예: {"p": 7, "q": 2}).
        reason: 어떤 성질이 깨졌는지 설명.
    """

    params: dict[str, int] = Field(
        description="반례를 재현하는 매개변수 (예: p, q, s, u, C)",
    )
    reason: str = Field(description="깨진 성질에 대한 설명")


class SweepReport(BaseModel):
    """유한 범위 검증 스윕 전체 결과.

    Attributes:
        suite: 스윕 이름 (shift, lemma3, theorem1, theorem2, lemma4, lemma5).
        p_max: 검증한 p의 상한.
        checked: 점검한 매개변수 조합 수.
        passed: 반례 없이 통과한 조합 수.
        per_p: p → 통과한 조합 수.
        counterexamples: 발견된 반례 목록 (기대값: 없음).
        notes: 스윕별 부가 관측값 (실험 결과, 개수 통계 등).
    """

    suite: str = Field(description="스윕 이름")
    p_max: int = Field(description="검증한 p의 상한")
    checked: int = Field(default=0, description="점검한 매개변수 조합 수")
    passed: int = Field(default=0, description="통과한 조합 수")
    per_p: dict[int, int] = Field(
        default_factory=dict,
        description="p → 통과한 조합 수",
    )
    counterexamples: list[Counterexample] = Field(
        default_factory=list,
        description="발견된 반례 목록 (기대값: 빈 리스트)",
    )
    notes: dict[str, Any] = Field(
        default_factory=dict,
        description="스윕별 부가 관측값 (예: 실험 결과, 해의 개수)",
    )

    @property
    def ok(self) -> bool:
        """반례가 하나도 없으면 True."""
        return not self.counterexamples

    def record(self, p: int, failures: list[Counterexample]) -> None:
        """한 매개변수 조합의 점검 결과를 누적한다.

        Args:
            p: 조합의 p 값.
            failures: 해당 조합에서 발견된 반례 (통과면 빈 리스트).
        """
        self.checked += 1
        self.per_p.setdefault(p, 0)
        if failures:
            self.counterexamples.extend(failures)
        else:
            self.passed += 1
            self.per_p[p] += 1


if __name__ == "__main__":
    """스키마 모델 생성 및 직렬화를 검증한다."""
    report = SweepReport(suite="shift", p_max=7)
    report.record(5, [])
    report.record(
        7,
        [Counterexample(params={"p": 7, "q": 2}, reason="예시 반례")],
    )
    print(f"통과 여부: {report.ok}")
    print(report.model_dump_json(indent=2))
