"""LensSettings 환경변수 설정 테스트 모듈."""

import pytest
from pydantic import ValidationError

from src.config.settings import LensSettings, SweepCaps


@pytest.fixture(autouse=True)
def _clear_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """테스트마다 LENS_* 환경변수를 비운다."""
    for name in ("PROFILE", "LOG_LEVEL", "OUTPUT_VERSION", "QUICK_CAPS", "FULL_CAPS"):
        monkeypatch.delenv(f"LENS_{name}", raising=False)


class TestLensSettings:
    """LensSettings 모델 테스트."""

    def test_defaults(self) -> None:
        """환경변수가 없으면 quick 프로필과 WARNING 레벨을 쓴다."""
        settings = LensSettings(_env_file=None)  # type: ignore[call-arg]

        assert settings.profile == "quick"
        assert settings.log_level == "WARNING"
        assert settings.output_version == "1.0"
        assert settings.caps_for().theorem1 == 13

    def test_load_from_env_vars(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """LENS_* 환경변수에서 값을 읽는다."""
        monkeypatch.setenv("LENS_PROFILE", "full")
        monkeypatch.setenv("LENS_LOG_LEVEL", "DEBUG")

        settings = LensSettings(_env_file=None)  # type: ignore[call-arg]

        assert settings.profile == "full"
        assert settings.log_level == "DEBUG"
        assert settings.caps_for().theorem2 == 500

    def test_explicit_profile_overrides_default(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """caps_for 인자로 준 프로필이 기본 프로필보다 우선한다."""
        monkeypatch.setenv("LENS_PROFILE", "full")

        settings = LensSettings(_env_file=None)  # type: ignore[call-arg]

        assert settings.caps_for("quick").shift == 40

    def test_caps_json_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """상한 묶음은 JSON 문자열로 덮어쓴다."""
        monkeypatch.setenv(
            "LENS_QUICK_CAPS",
            '{"shift": 10, "lemma3": 10, "theorem1": 7, "theorem2": 11,'
            ' "lemma4": 8, "lemma5": 6, "key_identity": 9}',
        )

        settings = LensSettings(_env_file=None)  # type: ignore[call-arg]

        assert settings.quick_caps.theorem1 == 7
        assert settings.caps_for().for_suite("key_identity") == 9

    def test_invalid_profile(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """알 수 없는 프로필은 ValidationError를 발생시킨다."""
        monkeypatch.setenv("LENS_PROFILE", "huge")

        with pytest.raises(ValidationError):
            LensSettings(_env_file=None)  # type: ignore[call-arg]


class TestSweepCaps:
    """SweepCaps 모델 테스트."""

    def test_for_suite(self) -> None:
        """스윕 이름으로 상한을 찾는다."""
        caps = LensSettings(_env_file=None).caps_for("quick")  # type: ignore[call-arg]
        assert caps.for_suite("lemma5") == 12
        assert caps.for_suite("shift") == 40

    def test_minimum_caps(self) -> None:
        """오라클 상한이 4 미만이면 ValidationError를 발생시킨다."""
        with pytest.raises(ValidationError):
            SweepCaps(
                shift=2, lemma3=2, theorem1=2, theorem2=3,
                lemma4=3, lemma5=4, key_identity=2,
            )
