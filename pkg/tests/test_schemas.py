"""Pydantic 스키마 모델 테스트 모듈.

LensSpace, DInvTable, SpinSet, RelFnTable, TorsorIso, SbarSet,
SweepReport의 검증 규칙, 직렬화/역직렬화를 검증한다.
"""

import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.schemas.classify import TorsorIso
from src.schemas.lens import DInvTable, LensSpace, RelFnTable, SpinSet
from src.schemas.report import Counterexample, SweepReport
from src.schemas.residue import SbarSet


class TestLensSpace:
    """LensSpace 모델 테스트."""

    def test_valid(self) -> None:
        """서로소이고 0 < q < p이면 생성된다."""
        space = LensSpace(p=7, q=2)
        assert space.name == "L(7,2)"

    def test_s3(self) -> None:
        """p = 1이면 q = 0만 허용한다."""
        assert LensSpace(p=1, q=0).name == "L(1,0)"
        with pytest.raises(ValidationError, match="q = 0"):
            LensSpace(p=1, q=1)

    def test_not_coprime(self) -> None:
        """서로소가 아니면 ValidationError를 발생시킨다."""
        with pytest.raises(ValidationError, match="서로소"):
            LensSpace(p=4, q=2)

    @pytest.mark.parametrize(("p", "q"), [(5, 0), (5, 6), (5, -1), (0, 0)])
    def test_out_of_range(self, p: int, q: int) -> None:
        """범위를 벗어난 q 또는 p는 ValidationError를 발생시킨다."""
        with pytest.raises(ValidationError):
            LensSpace(p=p, q=q)

    def test_frozen_hashable(self) -> None:
        """불변 모델이므로 딕셔너리 키로 쓸 수 있다."""
        spaces = {LensSpace(p=5, q=2): "a", LensSpace(p=5, q=2): "b"}
        assert len(spaces) == 1


class TestDInvTable:
    """DInvTable 모델 테스트."""

    def test_serialize_as_strings(self) -> None:
        """유리수는 num/den 문자열로 직렬화된다 (정수도 /1)."""
        table = DInvTable(
            space=LensSpace(p=5, q=2),
            values=[Fraction(-2, 5), Fraction(-2, 5), Fraction(2, 5), Fraction(0), Fraction(2, 5)],
        )
        data = table.model_dump()
        assert data["values"] == ["-2/5", "-2/5", "2/5", "0/1", "2/5"]
        assert data["orientation"] == "standard"

    def test_parse_strings(self) -> None:
        """num/den 문자열과 정수를 Fraction으로 읽는다."""
        table = DInvTable(space=LensSpace(p=3, q=1), values=["-1/2", "1/6", 0])
        assert table.values == [Fraction(-1, 2), Fraction(1, 6), Fraction(0)]

    def test_json_roundtrip(self) -> None:
        """JSON 직렬화 후 다시 읽으면 같은 표가 된다."""
        original = DInvTable(
            space=LensSpace(p=3, q=1),
            values=[Fraction(-1, 2), Fraction(1, 6), Fraction(1, 6)],
            orientation="reversed",
        )
        restored = DInvTable.model_validate(json.loads(original.model_dump_json()))
        assert restored == original

    def test_wrong_length(self) -> None:
        """길이가 p가 아니면 ValidationError를 발생시킨다."""
        with pytest.raises(ValidationError, match="길이"):
            DInvTable(space=LensSpace(p=3, q=1), values=[Fraction(0), Fraction(0)])

    def test_value_reduces_label(self) -> None:
        """value는 라벨을 법 p로 줄인다."""
        table = DInvTable(space=LensSpace(p=3, q=1), values=["-1/2", "1/6", "1/6"])
        assert table.value(-3) == Fraction(-1, 2)
        assert table.value(4) == Fraction(1, 6)


class TestSpinSet:
    """SpinSet 모델 테스트."""

    def test_odd_p_single(self) -> None:
        """p가 홀수이면 spin 구조가 1개다."""
        spin = SpinSet(space=LensSpace(p=7, q=2), labels=(4,))
        assert 4 in spin
        assert 3 not in spin

    def test_even_p_pair(self) -> None:
        """p가 짝수이면 spin 구조가 2개다."""
        spin = SpinSet(space=LensSpace(p=4, q=1), labels=(0, 2))
        assert spin.labels == (0, 2)

    @pytest.mark.parametrize("labels", [(0, 2), (), (7,)])
    def test_invalid_labels(self, labels: tuple[int, ...]) -> None:
        """개수나 범위가 맞지 않으면 ValidationError를 발생시킨다."""
        with pytest.raises(ValidationError):
            SpinSet(space=LensSpace(p=7, q=2), labels=labels)


class TestRelFnTable:
    """RelFnTable 모델 테스트."""

    def test_valid(self) -> None:
        """f(s, 0) = 0이고 길이가 p이면 생성된다."""
        table = RelFnTable(space=LensSpace(p=5, q=1), s=0, values=[0, 4, 6, 6, 4])
        assert table.values[2] == 6

    def test_nonzero_origin(self) -> None:
        """f(s, 0) ≠ 0이면 ValidationError를 발생시킨다."""
        with pytest.raises(ValidationError, match="f\\(s, 0\\)"):
            RelFnTable(space=LensSpace(p=5, q=1), s=0, values=[1, 4, 6, 6, 4])

    def test_wrong_length(self) -> None:
        """길이가 p가 아니면 ValidationError를 발생시킨다."""
        with pytest.raises(ValidationError, match="길이"):
            RelFnTable(space=LensSpace(p=5, q=1), s=0, values=[0, 4])


class TestTorsorIso:
    """TorsorIso 모델 테스트."""

    def test_apply(self) -> None:
        """i를 [c + u·i]_p로 보낸다."""
        iso = TorsorIso(p=7, c=3, u=4)
        assert [iso.apply(i) for i in range(7)] == [3, 0, 4, 1, 5, 2, 6]

    def test_compose(self) -> None:
        """합성은 inner를 먼저 적용한 결과와 같다."""
        outer = TorsorIso(p=7, c=2, u=3)
        inner = TorsorIso(p=7, c=5, u=4)
        composed = outer.compose(inner)
        assert all(composed.apply(i) == outer.apply(inner.apply(i)) for i in range(7))

    def test_compose_different_modulus(self) -> None:
        """법이 다르면 ValueError를 발생시킨다."""
        with pytest.raises(ValueError, match="법이 다른"):
            TorsorIso(p=7, c=0, u=1).compose(TorsorIso(p=5, c=0, u=1))

    def test_non_unit(self) -> None:
        """u가 단원이 아니면 ValidationError를 발생시킨다."""
        with pytest.raises(ValidationError, match="단원"):
            TorsorIso(p=8, c=0, u=2)

    def test_out_of_range(self) -> None:
        """c가 [0, p)를 벗어나면 ValidationError를 발생시킨다."""
        with pytest.raises(ValidationError):
            TorsorIso(p=7, c=7, u=1)


class TestSbarSet:
    """SbarSet 모델 테스트."""

    def _build(self, **overrides: object) -> SbarSet:
        data: dict[str, object] = {
            "p": 5,
            "q": 1,
            "members": [0, 1, 4],
            "multiplicity": {0: 1, 1: 2, 4: 2},
            "is_prime": True,
            "characterization_applies": True,
            "matches_characterization": True,
        }
        data.update(overrides)
        return SbarSet(**data)  # type: ignore[arg-type]

    def test_valid(self) -> None:
        """중복도 합이 p이고 0을 포함하면 생성된다."""
        assert self._build().size == 3

    def test_keys_mismatch(self) -> None:
        """members와 중복도 키가 다르면 ValidationError를 발생시킨다."""
        with pytest.raises(ValidationError, match="일치하지"):
            self._build(members=[0, 1])

    def test_total_mismatch(self) -> None:
        """중복도 합이 p가 아니면 ValidationError를 발생시킨다."""
        with pytest.raises(ValidationError, match="합"):
            self._build(multiplicity={0: 1, 1: 2, 4: 1})

    def test_missing_zero(self) -> None:
        """0이 없으면 ValidationError를 발생시킨다."""
        with pytest.raises(ValidationError, match="0은"):
            self._build(members=[1, 4], multiplicity={1: 3, 4: 2})

    def test_zero_multiplicity_left_to_sweep(self) -> None:
        """홀수 소수에서도 0의 중복도 패턴은 모델이 막지 않는다."""
        sbar = self._build(
            members=[0, 1], multiplicity={0: 3, 1: 2}, matches_characterization=False,
        )
        assert sbar.multiplicity[0] == 3

    def test_zero_multiplicity_free_when_not_applicable(self) -> None:
        """특성화가 적용되지 않으면 0의 중복도 제약이 없다."""
        sbar = self._build(
            p=9, q=2, members=[0, 1], multiplicity={0: 3, 1: 6},
            is_prime=False, characterization_applies=False,
            matches_characterization=None,
        )
        assert sbar.multiplicity[0] == 3


class TestSweepReport:
    """SweepReport 모델 테스트."""

    def test_record_pass_and_fail(self) -> None:
        """통과와 반례를 각각 누적한다."""
        report = SweepReport(suite="shift", p_max=7)
        report.record(5, [])
        report.record(5, [])
        report.record(7, [Counterexample(params={"p": 7, "q": 2}, reason="예시")])

        assert report.checked == 3
        assert report.passed == 2
        assert report.per_p == {5: 2, 7: 0}
        assert not report.ok
        assert report.counterexamples[0].params == {"p": 7, "q": 2}

    def test_empty_report_is_ok(self) -> None:
        """반례가 없으면 ok다."""
        assert SweepReport(suite="lemma4", p_max=4).ok

    def test_json_roundtrip(self) -> None:
        """JSON 직렬화 후 역직렬화하면 같은 보고서가 된다."""
        report = SweepReport(suite="theorem2", p_max=11, notes={"p2_members": [0, 1]})
        report.record(3, [])
        restored = SweepReport.model_validate_json(report.model_dump_json())
        assert restored == report
