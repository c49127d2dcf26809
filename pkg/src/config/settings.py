"""검증 스윕 및 출력 환경변수 설정 모듈.

pydantic-settings의 BaseSettings로 .env 파일 또는 LENS_* 환경변수에서
실행 프로필, 로그 레벨, 출력 버전, 스윕별 p 상한을 읽는다.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

Profile = Literal["quick", "full"]
Suite = Literal[
    "shift", "lemma3", "theorem1", "theorem2", "lemma4", "lemma5", "key_identity",
]


class SweepCaps(BaseModel):
    """스윕별 p 상한.

    Attributes:
        shift: 이동 공식/켤레 대칭 스윕 상한.
        lemma3: 상대 불변량 f 스윕 상한.
        theorem1: 분류 정리 스윕 상한.
        theorem2: 이차잉여 특성화 스윕 상한.
        lemma4: 단일 함수 오라클 상한.
        lemma5: 함수 쌍 오라클 상한.
        key_identity: 네 브래킷 항등식 스윕 상한.
    """

    shift: int = Field(ge=2, description="이동 공식 스윕 p 상한")
    lemma3: int = Field(ge=2, description="상대 불변량 스윕 p 상한")
    theorem1: int = Field(ge=2, description="분류 정리 스윕 p 상한")
    theorem2: int = Field(ge=3, description="이차잉여 특성화 스윕 p 상한")
    lemma4: int = Field(ge=4, description="단일 함수 오라클 p 상한")
    lemma5: int = Field(ge=4, description="함수 쌍 오라클 p 상한")
    key_identity: int = Field(ge=2, description="네 브래킷 항등식 스윕 p 상한")

    def for_suite(self, suite: Suite) -> int:
        """스윕 이름에 해당하는 p 상한을 반환한다."""
        return getattr(self, suite)


# CI에서 수 초 안에 끝나는 수준
_QUICK_CAPS = SweepCaps(
    shift=40, lemma3=40, theorem1=13, theorem2=61,
    lemma4=20, lemma5=12, key_identity=40,
)
_FULL_CAPS = SweepCaps(
    shift=200, lemma3=200, theorem1=50, theorem2=500,
    lemma4=100, lemma5=40, key_identity=200,
)


class LensSettings(BaseSettings):
    """렌즈 공간 검증 도구 설정값.

    env_prefix="LENS_"으로 필드명이 LENS_* 환경변수에 매핑된다.
    상한 묶음은 JSON 문자열로 덮어쓴다 (예: LENS_QUICK_CAPS='{"shift": 10, ...}').

    Attributes:
        profile: 기본 스윕 프로필.
        log_level: 로그 레벨 이름.
        output_version: 출력 레코드의 형식 버전.
        quick_caps: quick 프로필 상한.
        full_caps: full 프로필 상한.
    """

    model_config = SettingsConfigDict(
        env_prefix="LENS_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    profile: Profile = Field(default="quick", description="기본 스윕 프로필")
    log_level: str = Field(default="WARNING", description="로그 레벨 (DEBUG, INFO, ...)")
    output_version: str = Field(default="1.0", description="출력 레코드 형식 버전")
    quick_caps: SweepCaps = Field(
        default=_QUICK_CAPS,
        description="quick 프로필 스윕 상한",
    )
    full_caps: SweepCaps = Field(
        default=_FULL_CAPS,
        description="full 프로필 스윕 상한",
    )

    def caps_for(self, profile: Profile | None = None) -> SweepCaps:
        """프로필의 스윕 상한을 반환한다 (None이면 기본 프로필)."""
        chosen = profile or self.profile
        return self.full_caps if chosen == "full" else self.quick_caps


if __name__ == "__main__":
    """현재 환경의 설정값을 출력한다."""
    from dotenv import load_dotenv

    load_dotenv()

    settings = LensSettings()
    print(settings.model_dump_json(indent=2))
    print(f"theorem1 상한 ({settings.profile}): {settings.caps_for().theorem1}")
