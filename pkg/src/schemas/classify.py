"""렌즈 공간 쌍 분류 관련 데이터 타입 정의 모듈.

spin-c 토르소르 아핀 동형, 분류 판정 결과, 핵심 항등식 점검 보고서를
Pydantic 모델로 타입 안전하게 관리한다.
ClassifyService가 이 스키마를 통해 데이터를 주고받는다.
"""

from __future__ import annotations

from math import gcd

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.schemas.lens import LensSpace


class TorsorIso(BaseModel):
    """Z/pZ의 아핀 전단사 i ↦ [c + u·i]_p.

    Attributes:
        p: 법.
        c: 평행이동 성분 (0 <= c < p).
        u: 곱셈 단원 (0 <= u < p, gcd(u, p) = 1).
    """

    model_config = ConfigDict(frozen=True)

    p: int = Field(ge=1, description="법 p")
    c: int = Field(description="평행이동 성분 c (0 <= c < p)")
    u: int = Field(description="곱셈 단원 u (gcd(u, p) = 1)")

    @model_validator(mode="after")
    def _check_bijection(self) -> TorsorIso:
        """c, u의 범위와 u의 가역성을 검증한다."""
        if not 0 <= self.c < self.p or not 0 <= self.u < self.p:
            raise ValueError(
                f"c, u는 [0, p) 범위여야 합니다 (p={self.p}, c={self.c}, u={self.u})."
            )
        if gcd(self.u, self.p) != 1:
            raise ValueError(f"u={self.u}은(는) 법 {self.p}의 단원이 아닙니다.")
        return self

    def apply(self, label: int) -> int:
        """라벨 i를 [c + u·i]_p로 보낸다."""
        return (self.c + self.u * label) % self.p

    def compose(self, inner: TorsorIso) -> TorsorIso:
        """self ∘ inner를 반환한다 (inner를 먼저 적용).

        Raises:
            ValueError: 두 사상의 법이 다른 경우.
        """
        if inner.p != self.p:
            raise ValueError(f"법이 다른 사상은 합성할 수 없습니다 ({inner.p} != {self.p}).")
        return TorsorIso(
            p=self.p,
            c=(self.c + self.u * inner.c) % self.p,
            u=(self.u * inner.u) % self.p,
        )


class ClassificationVerdict(BaseModel):
    """같은 p를 갖는 렌즈 공간 쌍의 분류 판정.

    Attributes:
        space1: 첫 번째 렌즈 공간 L(p, q1).
        space2: 두 번째 렌즈 공간 L(p, q2).
        require_spin_compat: d_iso_exists 판정에 spin 호환을 요구했는지 여부.
        homeomorphic: 방향 보존 위상동형 여부 (q1 ≡ q2 또는 q1 q2 ≡ 1).
        d_iso_exists: d를 보존하는 아핀 토르소르 동형 존재 여부.
        unrestricted_iso_exists: spin 조건 없이 d 보존 동형이 존재하는지 여부.
        agreement: homeomorphic == d_iso_exists.
        witnesses: d를 보존하는 모든 아핀 동형.
        spin_compatible_witnesses: 그중 spin 구조를 spin 구조로 보내는 것.
    """

    space1: LensSpace = Field(description="첫 번째 렌즈 공간")
    space2: LensSpace = Field(description="두 번째 렌즈 공간")
    require_spin_compat: bool = Field(
        default=True,
        description="d_iso_exists 판정에 spin 호환을 요구했는지 여부",
    )
    homeomorphic: bool = Field(description="방향 보존 위상동형 여부")
    d_iso_exists: bool = Field(description="d 보존 아핀 토르소르 동형 존재 여부")
    unrestricted_iso_exists: bool = Field(
        description="spin 조건 없이 d 보존 동형이 존재하는지 여부 (실험 기록용)",
    )
    agreement: bool = Field(description="homeomorphic과 d_iso_exists의 일치 여부")
    witnesses: list[TorsorIso] = Field(
        default_factory=list,
        description="d를 보존하는 모든 아핀 동형 (u, c 오름차순)",
    )
    spin_compatible_witnesses: list[TorsorIso] = Field(
        default_factory=list,
        description="spin 구조 집합을 spin 구조 집합 안으로 보내는 증인",
    )


class KeyIdentityReport(BaseModel):
    """네 브래킷 항등식과 임계값 동치의 점별 비교 보고서.

    항등식: [s1+m] + [s2+(m+q)u] = [s2+mu] + [s1+m+uq]
    동치:   [s1+m] < p-[uq]  ⟺  [s2+mu] < p-[uq]

    Attributes:
        p: 법.
        q: 첫 번째 공간의 q.
        s1: 첫 번째 spin 구조.
        s2: 두 번째 spin 구조.
        u: 단원.
        identity_count: 항등식이 성립하는 m의 개수.
        equivalence_count: 임계값 동치가 성립하는 m의 개수.
        identity_all: 모든 m에서 항등식이 성립하면 True.
        pointwise_agree: 모든 m에서 (항등식 성립) == (동치 성립)이면 True.
    """

    p: int = Field(description="법 p")
    q: int = Field(description="첫 번째 공간의 q")
    s1: int = Field(description="첫 번째 spin 구조")
    s2: int = Field(description="두 번째 spin 구조")
    u: int = Field(description="단원 u")
    identity_count: int = Field(description="항등식이 성립하는 m의 개수")
    equivalence_count: int = Field(description="임계값 동치가 성립하는 m의 개수")
    identity_all: bool = Field(description="모든 m에서 항등식 성립 여부")
    pointwise_agree: bool = Field(
        description="모든 m에서 항등식 성립과 동치 성립이 같은지 여부",
    )


if __name__ == "__main__":
    """스키마 모델 생성 및 직렬화를 검증한다."""
    iso = TorsorIso(p=7, c=2, u=3)
    print(f"사상: {iso.model_dump_json()} → 1 ↦ {iso.apply(1)}")
    print(f"합성: {iso.compose(iso).model_dump_json()}")

    verdict = ClassificationVerdict(
        space1=LensSpace(p=7, q=2),
        space2=LensSpace(p=7, q=4),
        homeomorphic=True,
        d_iso_exists=True,
        unrestricted_iso_exists=True,
        agreement=True,
        witnesses=[iso],
        spin_compatible_witnesses=[iso],
    )
    print(f"판정: {verdict.model_dump_json(indent=2)}")
