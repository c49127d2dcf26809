"""렌즈 공간 d-invariant 계산 비즈니스 로직 서비스 모듈.

유클리드 알고리즘 형태의 재귀 공식으로 d(L(p,q), i)를 정확한 유리수로 계산하고,
전체 표 생성, spin 구조 판정, 켤레(conjugation) 작용, 방향 반전,
이동 공식(shift relation) 검증 스윕을 제공한다.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd

from src.schemas.lens import DInvTable, LensSpace, SpinSet
from src.schemas.report import Counterexample, SweepReport
from src.tools.modarith import units

logger = logging.getLogger(__name__)

# 행(표) 단위 캐시 크기
_ROW_CACHE_SIZE = 1024
# 단일 라벨 재귀 캐시 크기
_LABEL_CACHE_SIZE = 1 << 16
# 서비스 인스턴스별 검증 완료 행 캐시 크기
_CHECKED_CACHE_SIZE = 512

# (공통 분모 D, 정수 분자 N): d(i) = N[i] / D
ScaledRow = tuple[int, tuple[int, ...]]


@lru_cache(maxsize=_LABEL_CACHE_SIZE)
def _d_value(p: int, q: int, i: int) -> Fraction:
    """라벨 하나의 d 값을 재귀로 계산한다 (i는 이미 [0, p) 범위).

    d(L(p,q), i) = 1/4 - (2i+1-p-q)^2 / (4pq) - d(L(q, [p]_q), [i]_q),
    d(L(1, 0), 0) = 0.
    """
    if p == 1:
        return Fraction(0)
    t = 2 * i + 1 - p - q
    return Fraction(p * q - t * t, 4 * p * q) - _d_value(q, p % q, i % q)


@lru_cache(maxsize=_ROW_CACHE_SIZE)
def _scaled_row(p: int, q: int) -> ScaledRow:
    """L(p,q)의 d 값 전체를 공통 분모 D와 정수 분자 N으로 계산한다.

    d(i) = N[i] / D. 하위 표 (q, [p]_q)를 재사용하므로 유클리드 사슬을 따라
    한 번씩만 계산되고, 단계마다 공통 인수로 약분한다.
    """
    if p == 1:
        return 1, (0,)
    sub_den, sub_nums = _scaled_row(q, p % q)
    pq4 = 4 * p * q
    nums = [
        (p * q - t * t) * sub_den - pq4 * sub_nums[i % q]
        for i, t in ((i, 2 * i + 1 - p - q) for i in range(p))
    ]
    den = pq4 * sub_den
    common = gcd(den, *nums)
    return den // common, tuple(n // common for n in nums)


def shift_step(p: int, i: int) -> Fraction:
    """이동 공식의 우변 (p - 1 - 2[i]_p) / p를 반환한다."""
    return Fraction(p - 1 - 2 * (i % p), p)


class DInvariantService:
    """렌즈 공간 d-invariant 계산 및 검증 서비스.

    재귀 공식으로 값을 계산하고, 표를 반환하기 전에
    이동 공식과 켤레 대칭을 점검하여 내부 일관성을 보장한다.
    점검을 마친 행은 (p, q)별로 캐시한다.

    Attributes:
        _checked_row: (p, q) → 점검을 통과한 공통 분모 행.
    """

    def __init__(self) -> None:
        self._checked_row = lru_cache(maxsize=_CHECKED_CACHE_SIZE)(
            self._build_checked_row,
        )

    def d_invariant(self, space: LensSpace, i: int) -> Fraction:
        """단일 spin-c 라벨의 d-invariant를 계산한다.

        Args:
            space: 대상 렌즈 공간.
            i: 임의의 정수 라벨 (내부에서 [i]_p로 줄인다).

        Returns:
            d(L(p,q), i) (정확한 유리수).
        """
        return _d_value(space.p, space.q, i % space.p)

    def d_table(self, space: LensSpace) -> DInvTable:
        """라벨 0..p-1 전체의 d-invariant 표를 생성한다.

        반환 전에 이동 공식과 spin 구조 기준 켤레 대칭을 점검한다.

        Args:
            space: 대상 렌즈 공간.

        Returns:
            DInvTable: 길이 p의 d 표.

        Raises:
            RuntimeError: 이동 공식 또는 켤레 대칭이 깨진 경우 (내부 오류).
        """
        den, nums = self.scaled_row(space)
        return DInvTable(space=space, values=[Fraction(n, den) for n in nums])

    def scaled_row(self, space: LensSpace) -> ScaledRow:
        """점검을 마친 d 표를 공통 분모 표현으로 반환한다.

        d(i) = N[i] / D이며 정수 연산만으로 비교할 수 있다.

        Args:
            space: 대상 렌즈 공간.

        Returns:
            (D, N): 양의 공통 분모와 길이 p의 정수 분자.

        Raises:
            RuntimeError: 이동 공식 또는 켤레 대칭이 깨진 경우 (내부 오류).
        """
        return self._checked_row(space.p, space.q)

    def d_table_by_shift(self, space: LensSpace, anchor: int = 0) -> DInvTable:
        """한 라벨만 재귀로 계산하고 나머지는 이동 공식으로 전파한다.

        d_table()과 독립적인 두 번째 경로로, 두 결과가 같아야 한다.
        q가 단원이므로 i → i+q 궤도가 모든 라벨을 지난다.

        Args:
            space: 대상 렌즈 공간.
            anchor: 재귀로 계산할 기준 라벨.

        Returns:
            DInvTable: 이동 공식으로 채운 d 표.
        """
        p, q = space.p, space.q
        values: list[Fraction | None] = [None] * p
        label = anchor % p
        current = self.d_invariant(space, label)
        for _ in range(p):
            values[label] = current
            current = current + shift_step(p, label)
            label = (label + q) % p
        return DInvTable(space=space, values=values)

    def spin_structures(self, space: LensSpace) -> SpinSet:
        """(q-1)/2와 (p+q-1)/2 중 정수인 것을 spin 구조로 반환한다.

        Args:
            space: 대상 렌즈 공간.

        Returns:
            SpinSet: p가 홀수면 1개, 짝수면 2개의 라벨.
        """
        p, q = space.p, space.q
        labels = {
            (twice // 2) % p
            for twice in (q - 1, p + q - 1)
            if twice % 2 == 0
        }
        return SpinSet(space=space, labels=tuple(sorted(labels)))

    def spin_labels_by_congruence(self, space: LensSpace) -> SpinSet:
        """2i ≡ q - 1 (mod p)의 해를 전수 탐색하여 spin 구조를 구한다.

        spin_structures()의 교차 검증용 경로다.
        """
        p, q = space.p, space.q
        labels = tuple(i for i in range(p) if (2 * i - (q - 1)) % p == 0)
        return SpinSet(space=space, labels=labels)

    def conjugate_label(self, space: LensSpace, s: int, i: int) -> int:
        """spin 구조 s를 고정하는 켤레 작용으로 라벨 i를 보낸다.

        Args:
            space: 대상 렌즈 공간.
            s: spin 구조 라벨.
            i: 임의의 정수 라벨.

        Returns:
            [2s - i]_p.

        Raises:
            ValueError: s가 spin 구조가 아닌 경우.
        """
        self._require_spin(space, s)
        return (2 * s - i) % space.p

    def reverse_orientation_table(self, table: DInvTable) -> DInvTable:
        """방향을 반전한 공간의 표를 반환한다 (d(-Y) = -d(Y)).

        Args:
            table: 원래 d 표.

        Returns:
            DInvTable: 값의 부호를 바꾸고 orientation을 뒤집은 표.
        """
        flipped = "reversed" if table.orientation == "standard" else "standard"
        return DInvTable(
            space=table.space,
            values=[-v for v in table.values],
            orientation=flipped,
        )

    def verify_shift_suite(self, p_max: int) -> SweepReport:
        """p <= p_max인 모든 서로소 (p, q)에서 d 표의 성질을 전수 검증한다.

        점검 항목:
        1. 이동 공식 d(i+q) - d(i) = (p-1-2[i]_p)/p
        2. 재귀 표 == 이동 공식 전파 표 (독립 두 경로)
        3. spin 구조 개수 (홀수 1, 짝수 2)와 합동식 해의 일치
        4. 모든 spin 구조 기준 켤레 대칭 d(s+n) = d(s-n)
        5. 라벨 주기성 d(i) = d(i+p)

        Args:
            p_max: 검증할 p의 상한 (2 이상).

        Returns:
            SweepReport: 반례가 없으면 ok가 True.
        """
        report = SweepReport(suite="shift", p_max=p_max)
        logger.info("이동 공식 스윕 시작: p <= %d", p_max)

        for p in range(2, p_max + 1):
            for q in units(p):
                space = LensSpace(p=p, q=q)
                report.record(p, self._check_space(space))

        logger.info(
            "이동 공식 스윕 완료: %d개 중 %d개 통과",
            report.checked, report.passed,
        )
        return report

    # --- Private methods ---

    def _build_checked_row(self, p: int, q: int) -> ScaledRow:
        """공통 분모 행을 계산하고 이동 공식과 켤레 대칭을 점검한다."""
        space = LensSpace(p=p, q=q)
        den, nums = _scaled_row(p, q)

        shift_failure = self._first_shift_failure(space, den, nums)
        if shift_failure is not None:
            raise RuntimeError(
                f"{space.name} 표가 이동 공식을 위반합니다 (i={shift_failure})."
            )

        if p >= 2:
            for s in self.spin_structures(space).labels:
                if self._first_conjugation_failure(space, nums, s) is not None:
                    raise RuntimeError(
                        f"{space.name} 표가 spin 구조 {s} 기준 켤레 대칭을 위반합니다."
                    )
        return den, nums

    def _check_space(self, space: LensSpace) -> list[Counterexample]:
        """렌즈 공간 하나에 대해 d 표의 모든 성질을 점검한다.

        d_table()과 달리 예외를 던지지 않고 위반 사항을 반례로 모은다.
        """
        params = {"p": space.p, "q": space.q}
        den, nums = _scaled_row(space.p, space.q)
        values = [Fraction(n, den) for n in nums]
        failures: list[Counterexample] = []

        shift_failure = self._first_shift_failure(space, den, nums)
        if shift_failure is not None:
            failures.append(Counterexample(
                params={**params, "i": shift_failure},
                reason="이동 공식 위반",
            ))

        propagated = self.d_table_by_shift(space, anchor=0)
        if propagated.values != values:
            failures.append(Counterexample(
                params=params, reason="재귀 표와 이동 공식 전파 표 불일치",
            ))

        spin = self.spin_structures(space)
        if spin != self.spin_labels_by_congruence(space):
            failures.append(Counterexample(
                params=params, reason="spin 구조가 2i ≡ q-1 해와 불일치",
            ))

        for s in spin.labels:
            n = self._first_conjugation_failure(space, nums, s)
            if n is not None:
                failures.append(Counterexample(
                    params={**params, "s": s, "n": n},
                    reason="켤레 대칭 위반",
                ))

        periodicity_failure = next(
            (i for i in range(space.p) if self.d_invariant(space, i + space.p) != values[i]),
            None,
        )
        if periodicity_failure is not None:
            failures.append(Counterexample(
                params={**params, "i": periodicity_failure}, reason="라벨 주기성 위반",
            ))

        return failures

    def _first_shift_failure(
        self, space: LensSpace, den: int, nums: tuple[int, ...]
    ) -> int | None:
        """이동 공식이 처음 깨지는 라벨을 반환한다 (없으면 None).

        p·(N[i+q] - N[i]) = D·(p-1-2i)로 정수 비교한다.
        """
        p, q = space.p, space.q
        for i in range(p):
            if p * (nums[(i + q) % p] - nums[i]) != den * (p - 1 - 2 * i):
                return i
        return None

    def _first_conjugation_failure(
        self, space: LensSpace, nums: tuple[int, ...], s: int
    ) -> int | None:
        """d(s+n) = d(s-n)이 처음 깨지는 n을 반환한다 (없으면 None)."""
        p = space.p
        for n in range(p):
            if nums[(s + n) % p] != nums[(s - n) % p]:
                return n
        return None

    def _require_spin(self, space: LensSpace, s: int) -> None:
        """s가 spin 구조인지 확인한다.

        Raises:
            ValueError: s가 spin 구조가 아닌 경우.
        """
        spin = self.spin_structures(space)
        if s not in spin:
            raise ValueError(
                f"{s}은(는) {space.name}의 spin 구조가 아닙니다 "
                f"(spin 구조: {list(spin.labels)})."
            )


if __name__ == "__main__":
    """L(5,1), L(5,2)의 d 표와 spin 구조를 출력한다."""
    logging.basicConfig(level=logging.INFO)

    service = DInvariantService()
    for q in (1, 2):
        space = LensSpace(p=5, q=q)
        table = service.d_table(space)
        spin = service.spin_structures(space)
        print(f"=== {space.name} (spin: {list(spin.labels)}) ===")
        for label, value in enumerate(table.values):
            print(f"  {label}: {value}")

    report = service.verify_shift_suite(20)
    print(f"\n이동 공식 스윕 (p <= 20): {report.passed}/{report.checked} 통과")
