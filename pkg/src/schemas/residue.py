"""f의 법 p 상(image) 관련 데이터 타입 정의 모듈.

상대 불변량 f(s, n)을 법 p로 줄인 값들의 집합과 중복도를
Pydantic 모델로 관리한다. ResidueService가 이 스키마를 반환한다.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator


class SbarSet(BaseModel):
    """f(s, n) mod p의 상 집합과 중복도.

    Attributes:
        p: 법 (합성수도 허용, 이 경우 원시 데이터만 담는다).
        q: p와 서로소인 q.
        members: 상의 원소 (오름차순).
        multiplicity: 원소 → f̄(s, n)이 그 값이 되는 n의 개수.
        is_prime: p가 소수인지 여부.
        characterization_applies: 르장드르 기호 특성화를 적용할 수 있는지 (홀수 소수).
        matches_characterization: 특성화와 일치 여부 (적용 불가면 None).
    """

    p: int = Field(ge=2, description="법 p")
    q: int = Field(description="p와 서로소인 q")
    members: list[int] = Field(description="f̄의 상 원소 (오름차순)")
    multiplicity: dict[int, int] = Field(
        description="원소 → 그 값을 갖는 n의 개수",
    )
    is_prime: bool = Field(description="p가 소수인지 여부")
    characterization_applies: bool = Field(
        description="르장드르 기호 특성화 적용 가능 여부 (p가 홀수 소수일 때만 True)",
    )
    matches_characterization: bool | None = Field(
        default=None,
        description="특성화와 일치 여부 (적용 불가면 None)",
    )

    @model_validator(mode="after")
    def _check_counts(self) -> SbarSet:
        """members와 중복도 키 일치, 중복도 합 = p, 0 포함을 검증한다.

        홀수 소수에서의 중복도 패턴은 서비스 스윕이 반례로 점검한다.
        """
        if sorted(self.multiplicity) != self.members:
            raise ValueError("members와 multiplicity의 키가 일치하지 않습니다.")
        total = sum(self.multiplicity.values())
        if total != self.p:
            raise ValueError(f"중복도의 합은 p={self.p}여야 합니다 (받은 합 {total}).")
        if 0 not in self.multiplicity:
            raise ValueError("0은 항상 상에 포함되어야 합니다 (n = 0).")
        return self

    @property
    def size(self) -> int:
        """상의 원소 개수."""
        return len(self.members)


if __name__ == "__main__":
    """스키마 모델 생성 및 직렬화를 검증한다."""
    sbar = SbarSet(
        p=5,
        q=1,
        members=[0, 1, 4],
        multiplicity={0: 1, 1: 2, 4: 2},
        is_prime=True,
        characterization_applies=True,
        matches_characterization=True,
    )
    print(sbar.model_dump_json(indent=2))
