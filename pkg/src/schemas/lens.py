"""렌즈 공간과 d-invariant 표 관련 데이터 타입 정의 모듈.

렌즈 공간 L(p,q), spin-c 라벨별 d-invariant 표, spin 구조 집합,
상대 불변량 f(s, n) 표를 Pydantic 모델로 타입 안전하게 관리한다.
DInvariantService와 RelativeService가 이 스키마를 통해 데이터를 주고받는다.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Any, Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_serializer,
    field_validator,
    model_validator,
)

from src.tools.modarith import format_rational, parse_rational


class LensSpace(BaseModel):
    """렌즈 공간 L(p,q).

    방향은 자명한 매듭 위의 -p/q 수술로 얻는 쪽으로 고정한다.
    p = 1일 때는 S^3을 뜻하는 퇴화 쌍 (1, 0)만 허용한다.

    Attributes:
        p: 1차 호몰로지 Z/pZ의 위수.
        q: p와 서로소인 0 < q < p (p = 1이면 0).
    """

    model_config = ConfigDict(frozen=True)

    p: int = Field(ge=1, description="H_1의 위수 p (1이면 S^3)")
    q: int = Field(ge=0, description="p와 서로소인 매개변수 q (0 < q < p)")

    @model_validator(mode="after")
    def _check_parameters(self) -> LensSpace:
        """서로소 조건과 범위 조건을 검증한다."""
        if self.p == 1:
            if self.q != 0:
                raise ValueError(
                    f"p = 1이면 q = 0이어야 합니다 (q={self.q})."
                )
            return self
        if gcd(self.p, self.q) != 1:
            raise ValueError(
                f"p와 q는 서로소여야 합니다 "
                f"(p={self.p}, q={self.q}, gcd={gcd(self.p, self.q)})."
            )
        if not 0 < self.q < self.p:
            raise ValueError(
                f"q는 0 < q < p 범위여야 합니다 (p={self.p}, q={self.q})."
            )
        return self

    @property
    def name(self) -> str:
        """사람이 읽는 이름 (예: "L(5,2)")."""
        return f"L({self.p},{self.q})"


class DInvTable(BaseModel):
    """렌즈 공간의 spin-c 라벨 0..p-1 전체에 대한 d-invariant 표.

    라벨은 Heegaard 도식의 교점 라벨링 규약을 따른다.

    Attributes:
        space: 대상 렌즈 공간.
        values: 라벨 i의 d-invariant (정확한 유리수, 길이 p).
        orientation: standard(-p/q 수술 규약) 또는 reversed(방향 반전).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    space: LensSpace = Field(description="대상 렌즈 공간")
    values: list[Fraction] = Field(
        description="라벨 i → d(L(p,q), i) (정확한 유리수, 길이 p)",
    )
    orientation: Literal["standard", "reversed"] = Field(
        default="standard",
        description="방향 규약 (standard=-p/q 수술, reversed=반대 방향)",
    )

    @field_validator("values", mode="before")
    @classmethod
    def _parse_values(cls, raw: Any) -> Any:
        """num/den 문자열로 들어온 값을 Fraction으로 변환한다."""
        if isinstance(raw, list):
            return [
                parse_rational(v) if isinstance(v, str) else Fraction(v)
                for v in raw
            ]
        return raw

    @field_serializer("values")
    def _serialize_values(self, values: list[Fraction]) -> list[str]:
        """유리수를 num/den 문자열 리스트로 직렬화한다."""
        return [format_rational(v) for v in values]

    @model_validator(mode="after")
    def _check_length(self) -> DInvTable:
        """표 길이가 p와 같은지 검증한다."""
        if len(self.values) != self.space.p:
            raise ValueError(
                f"{self.space.name}의 d 표 길이는 {self.space.p}여야 합니다 "
                f"(받은 길이 {len(self.values)})."
            )
        return self

    def value(self, label: int) -> Fraction:
        """임의의 정수 라벨을 [label]_p로 줄여 d 값을 반환한다."""
        return self.values[label % self.space.p]


class SpinSet(BaseModel):
    """렌즈 공간의 spin 구조 라벨 집합.

    (q-1)/2와 (p+q-1)/2 중 정수인 것들이다.
    p가 홀수이면 1개, 짝수이면 2개다.

    Attributes:
        space: 대상 렌즈 공간.
        labels: spin 구조 라벨 (오름차순, [0, p) 범위).
    """

    model_config = ConfigDict(frozen=True)

    space: LensSpace = Field(description="대상 렌즈 공간")
    labels: tuple[int, ...] = Field(
        description="spin 구조 라벨 (오름차순)",
    )

    @model_validator(mode="after")
    def _check_size(self) -> SpinSet:
        """p의 홀짝에 따른 spin 구조 개수를 검증한다."""
        expected = 2 if self.space.p % 2 == 0 else 1
        if len(set(self.labels)) != expected:
            raise ValueError(
                f"{self.space.name}의 spin 구조는 {expected}개여야 합니다 "
                f"(받은 라벨 {self.labels})."
            )
        if any(not 0 <= s < self.space.p for s in self.labels):
            raise ValueError(f"spin 라벨이 [0, p) 범위를 벗어났습니다: {self.labels}")
        return self

    def __contains__(self, label: object) -> bool:
        return label in self.labels


class RelFnTable(BaseModel):
    """spin 구조 s에서 정규화한 상대 불변량 f(s, n) 표.

    f(s, n) = p * d(s + nq) - p * d(s)이며 n은 Z/pZ의 원소다.

    Attributes:
        space: 대상 렌즈 공간.
        s: 기준 spin 구조 라벨.
        values: n → f(s, n) (정수, 길이 p).
    """

    model_config = ConfigDict(frozen=True)

    space: LensSpace = Field(description="대상 렌즈 공간")
    s: int = Field(description="기준 spin 구조 라벨")
    values: list[int] = Field(description="n → f(s, n) (정수, 길이 p)")

    @model_validator(mode="after")
    def _check_shape(self) -> RelFnTable:
        """길이와 f(s, 0) = 0을 검증한다."""
        if len(self.values) != self.space.p:
            raise ValueError(
                f"f 표 길이는 {self.space.p}여야 합니다 "
                f"(받은 길이 {len(self.values)})."
            )
        if self.values[0] != 0:
            raise ValueError(f"f(s, 0)은 0이어야 합니다 (받은 값 {self.values[0]}).")
        return self


class RecursionCheck(BaseModel):
    """f(s, n+1) = f(s, n) + p - 1 - 2[s + nq]_p 점검 결과.

    Attributes:
        passed: 모든 n에서 성립하면 True.
        checked: 점검한 n의 개수 (p).
        first_failure: 처음 실패한 n (없으면 None).
    """

    passed: bool = Field(description="모든 n에서 점화식이 성립하는지 여부")
    checked: int = Field(description="점검한 n의 개수")
    first_failure: int | None = Field(
        default=None,
        description="처음 실패한 n (모두 통과하면 None)",
    )


class GFunctionReport(BaseModel):
    """두 렌즈 공간의 f 표로 만든 g 함수의 일관성 보고서.

    g(m) = f_1(s_1, m q') 와 g(m) = f_2(s_2, m u' q')를 각각 만들고
    모든 m에서 일치하는지, 두 이동 관계가 성립하는지 기록한다.

    Attributes:
        p: 공통 법.
        q1: 첫 번째 공간의 q.
        q2: 두 번째 공간의 q.
        s1: 첫 번째 공간의 spin 구조.
        s2: 두 번째 공간의 spin 구조.
        u: 재색인 단원.
        agree: 두 구성이 모든 m에서 일치하면 True.
        first_disagreement: 처음 불일치한 m (없으면 None).
        g_values: f_1에서 만든 g(0..p-1).
        step_relation_q: g(m+q) = g(m) + p - 1 - 2[s_1 + m]_p 성립 여부.
        step_relation_uq: f_2 구성에서 g(m+uq) = g(m) + p - 1 - 2[s_2 + mu]_p 성립 여부.
    """

    p: int = Field(description="공통 법 p")
    q1: int = Field(description="첫 번째 공간의 q")
    q2: int = Field(description="두 번째 공간의 q")
    s1: int = Field(description="첫 번째 공간의 spin 구조")
    s2: int = Field(description="두 번째 공간의 spin 구조")
    u: int = Field(description="재색인 단원 u")
    agree: bool = Field(description="두 g 구성이 모든 m에서 일치하는지 여부")
    first_disagreement: int | None = Field(
        default=None,
        description="처음 불일치한 m (모두 일치하면 None)",
    )
    g_values: list[int] = Field(description="f_1 경로로 만든 g(0..p-1)")
    step_relation_q: bool = Field(
        description="g(m+q) = g(m) + p - 1 - 2[s_1+m]_p 성립 여부",
    )
    step_relation_uq: bool = Field(
        description="g(m+uq) = g(m) + p - 1 - 2[s_2+mu]_p 성립 여부 (f_2 경로)",
    )


if __name__ == "__main__":
    """스키마 모델 생성 및 직렬화를 검증한다."""
    space = LensSpace(p=3, q=1)
    print(f"렌즈 공간: {space.name}")

    table = DInvTable(
        space=space,
        values=[Fraction(-1, 2), Fraction(1, 6), Fraction(1, 6)],
    )
    print(f"d 표: {table.model_dump_json(indent=2)}")

    spin = SpinSet(space=LensSpace(p=4, q=1), labels=(0, 2))
    print(f"spin 구조: {spin.model_dump_json()}")
