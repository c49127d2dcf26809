"""LemmaService 오라클 테스트 모듈.

등차 함수 명세, 단일 함수 오라클, 함수 쌍 오라클,
재매개화 증인, 전수 스윕을 검증한다.
"""

import pytest

from src.schemas.lemma import StepFunctionSpec
from src.services.lemma_service import LemmaService, canonical_step
from src.tools.modarith import mod_inv, units


@pytest.fixture
def service() -> LemmaService:
    """LemmaService 인스턴스를 생성한다."""
    return LemmaService()


class TestCanonicalStep:
    """canonical_step 함수 테스트."""

    @pytest.mark.parametrize(
        ("n", "p", "expected"),
        [(3, 7, 3), (4, 7, -3), (-1, 5, -1), (2, 4, 2), (6, 4, 2), (0, 9, 0)],
    )
    def test_representative(self, n: int, p: int, expected: int) -> None:
        """(-p/2, p/2] 대표원을 반환하고 p/2는 +p/2로 둔다."""
        assert canonical_step(n, p) == expected


class TestStepFunctionSpec:
    """StepFunctionSpec 스키마 테스트."""

    def test_identity_satisfies_every_threshold(self) -> None:
        """항등 함수는 모든 C에서 조건을 만족한다."""
        spec = StepFunctionSpec(p=9, h0=0, n=1)
        assert all(spec.satisfies(C) for C in range(2, 8))

    def test_reflection_satisfies(self) -> None:
        """h0 = C-1, n = -1이면 조건을 만족한다."""
        for C in range(2, 8):
            assert StepFunctionSpec(p=9, h0=C - 1, n=-1, C=C).satisfies()

    def test_step_two_fails(self) -> None:
        """p = 7, n = 2, C = 3이면 어떤 h0도 조건을 만족하지 않는다."""
        assert not any(StepFunctionSpec(p=7, h0=h0, n=2, C=3).satisfies() for h0 in range(7))

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"p": 7, "h0": 7, "n": 1},
            {"p": 7, "h0": 0, "n": 4},
            {"p": 4, "h0": 0, "n": -2},
            {"p": 7, "h0": 0, "n": 1, "C": 1},
            {"p": 7, "h0": 0, "n": 1, "C": 6},
        ],
    )
    def test_invalid(self, kwargs: dict[str, int]) -> None:
        """범위를 벗어나면 ValueError를 발생시킨다."""
        with pytest.raises(ValueError):
            StepFunctionSpec(**kwargs)

    def test_missing_threshold(self) -> None:
        """임계값 없이 satisfies를 호출하면 ValueError를 발생시킨다."""
        with pytest.raises(ValueError, match="임계값"):
            StepFunctionSpec(p=7, h0=0, n=1).satisfies()


class TestCheckLemma4:
    """check_lemma4 메서드 테스트."""

    @pytest.mark.parametrize("p", [4, 7, 10])
    def test_exactly_two_satisfiers(self, service: LemmaService, p: int) -> None:
        """모든 C에서 항등 함수와 반사 함수 두 개만 조건을 만족한다."""
        check = service.check_lemma4(p)
        assert check.ok
        assert check.satisfying == {C: 2 for C in range(2, p - 1)}
        assert check.checked == (p - 3) * p * p
        assert check.reduction_checked == (p - 3) * p * p

    def test_rejects_small_p(self, service: LemmaService) -> None:
        """p < 4이면 ValueError를 발생시킨다."""
        with pytest.raises(ValueError, match="4 이상"):
            service.check_lemma4(3)


class TestCheckLemma5:
    """check_lemma5 메서드 테스트."""

    @pytest.mark.parametrize("p", [5, 7, 8])
    def test_no_counterexamples(self, service: LemmaService, p: int) -> None:
        """(x, y)마다 자기 자신과 반사 쌍만 같은 패턴을 갖는다."""
        check = service.check_lemma5(p)
        assert check.ok
        assert check.satisfying == {C: 2 * p * len(units(p)) for C in range(2, p - 1)}

    def test_reflection_pair_condition(self) -> None:
        """(X, Y) = (-x+C-1, -y)는 모든 m에서 조건을 만족한다."""
        p, C = 7, 3
        for x in range(p):
            for y in units(p):
                X, Y = (C - 1 - x) % p, (-y) % p
                assert all(
                    ((x + m * y) % p < C) == ((X + m * Y) % p < C) for m in range(p)
                )

    def test_rejects_small_p(self, service: LemmaService) -> None:
        """p < 4이면 ValueError를 발생시킨다."""
        with pytest.raises(ValueError):
            service.check_lemma5(2)


class TestRescalingWitness:
    """lemma4_rescaling_witness 메서드 테스트."""

    def test_identity(self, service: LemmaService) -> None:
        """(x, y, x, y)는 항등 명세가 된다."""
        spec = service.lemma4_rescaling_witness(3, 2, 3, 2, 7)
        assert (spec.h0, spec.n) == (0, 1)

    def test_trivial_first_function(self, service: LemmaService) -> None:
        """x = 0, y = 1이면 h0 = X, n = Y다."""
        spec = service.lemma4_rescaling_witness(0, 1, 5, 3, 11)
        assert (spec.h0, spec.n) == (5, 3)

    def test_matches_direct_evaluation(self, service: LemmaService) -> None:
        """모든 i에서 F(m(i)) = H(i)다."""
        for p in (5, 8, 11):
            for x in range(p):
                for y in units(p):
                    for Y in units(p):
                        X = (2 * x + 1) % p
                        spec = service.lemma4_rescaling_witness(x, y, X, Y, p)
                        y_inv = mod_inv(y, p)
                        for i in range(p):
                            assert spec.evaluate(i) == (X + ((i - x) * y_inv) * Y) % p

    def test_reflection_pair_gives_lemma4_satisfier(self, service: LemmaService) -> None:
        """반사 쌍을 재매개화하면 임계값 조건을 만족하는 명세가 된다."""
        p, C = 9, 4
        for x in range(p):
            for y in units(p):
                spec = service.lemma4_rescaling_witness(x, y, (C - 1 - x) % p, (-y) % p, p, C)
                assert spec.satisfies()
                assert (spec.h0, spec.n) == (C - 1, -1)

    def test_non_unit_rejected(self, service: LemmaService) -> None:
        """단원이 아닌 기울기는 ValueError를 발생시킨다."""
        with pytest.raises(ValueError):
            service.lemma4_rescaling_witness(0, 2, 1, 1, 8)
        with pytest.raises(ValueError):
            service.lemma4_rescaling_witness(0, 1, 1, 4, 8)


class TestLemmaSweeps:
    """verify_lemma4 / verify_lemma5 스윕 테스트."""

    def test_lemma4(self, service: LemmaService) -> None:
        """p <= 16에서 반례가 없다."""
        report = service.verify_lemma4(16)
        assert report.ok
        assert report.suite == "lemma4"
        assert sorted(report.per_p) == list(range(4, 17))
        assert report.notes["satisfying"][6] == {2: 2, 3: 2, 4: 2}

    def test_lemma5(self, service: LemmaService) -> None:
        """p <= 10에서 반례가 없다."""
        report = service.verify_lemma5(10)
        assert report.ok
        assert report.suite == "lemma5"
