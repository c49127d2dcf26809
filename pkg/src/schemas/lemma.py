"""조합 보조정리 오라클 관련 데이터 타입 정의 모듈.

Z/pZ 위의 등차 함수 H(i) = [h0 + i·n]_p 명세와
한 p에 대한 전수 점검 결과를 Pydantic 모델로 관리한다.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.schemas.report import Counterexample


class StepFunctionSpec(BaseModel):
    """등차 함수 H(i) = [h0 + i·n]_p와 임계값 C.

    Attributes:
        p: 법.
        h0: H(0) (0 <= h0 < p).
        n: 공차의 정규 대표원 (-p/2 < n <= p/2).
        C: 임계값 (2 <= C <= p-2, 없으면 None).
    """

    model_config = ConfigDict(frozen=True)

    p: int = Field(ge=2, description="법 p")
    h0: int = Field(description="H(0), [0, p) 범위")
    n: int = Field(description="공차 정규 대표원, (-p/2, p/2] 범위")
    C: int | None = Field(default=None, description="임계값 C (2 <= C <= p-2)")

    @model_validator(mode="after")
    def _check_ranges(self) -> StepFunctionSpec:
        """h0, n, C의 범위를 검증한다."""
        if not 0 <= self.h0 < self.p:
            raise ValueError(f"h0는 [0, p) 범위여야 합니다 (p={self.p}, h0={self.h0}).")
        if not -self.p < 2 * self.n <= self.p:
            raise ValueError(
                f"n은 (-p/2, p/2] 범위의 정규 대표원이어야 합니다 (p={self.p}, n={self.n})."
            )
        if self.C is not None and not 2 <= self.C <= self.p - 2:
            raise ValueError(f"C는 [2, p-2] 범위여야 합니다 (p={self.p}, C={self.C}).")
        return self

    def evaluate(self, i: int) -> int:
        """H(i) = [h0 + i·n]_p를 반환한다."""
        return (self.h0 + i * self.n) % self.p

    def satisfies(self, C: int | None = None) -> bool:
        """모든 i in [0, p)에서 H(i) < C ⟺ i < C이면 True.

        Raises:
            ValueError: 임계값이 주어지지 않은 경우.
        """
        threshold = self.C if C is None else C
        if threshold is None:
            raise ValueError("임계값 C가 필요합니다.")
        return all(
            (self.evaluate(i) < threshold) == (i < threshold)
            for i in range(self.p)
        )


class LemmaCheck(BaseModel):
    """한 p에 대한 보조정리 오라클 전수 점검 결과.

    Attributes:
        lemma: 오라클 이름 (lemma4 또는 lemma5).
        p: 법.
        checked: 점검한 (매개변수, C) 조합 수.
        satisfying: C → 조건을 만족한 조합 수.
        reduction_checked: C >= p/2 축약 대응을 점검한 조합 수 (lemma4만).
        counterexamples: 결론을 위반한 조합 (기대값: 없음).
    """

    lemma: str = Field(description="오라클 이름 (lemma4, lemma5)")
    p: int = Field(description="법 p")
    checked: int = Field(default=0, description="점검한 조합 수")
    satisfying: dict[int, int] = Field(
        default_factory=dict,
        description="C → 조건을 만족한 조합 수",
    )
    reduction_checked: int = Field(
        default=0,
        description="임계값 축약 대응을 점검한 조합 수",
    )
    counterexamples: list[Counterexample] = Field(
        default_factory=list,
        description="결론을 위반한 조합",
    )

    @property
    def ok(self) -> bool:
        """반례가 없으면 True."""
        return not self.counterexamples


if __name__ == "__main__":
    """스키마 모델 생성과 평가를 검증한다."""
    spec = StepFunctionSpec(p=7, h0=2, n=-1, C=3)
    print(f"H = {[spec.evaluate(i) for i in range(7)]}, 만족={spec.satisfies()}")
    print(LemmaCheck(lemma="lemma4", p=7, satisfying={2: 2, 3: 2}).model_dump_json())
