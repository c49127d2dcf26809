"""f의 법 p 상 계산 및 이차잉여 특성화 검증 서비스 모듈.

실제 f 표(d-invariant 경로)를 법 p로 줄여 상 집합과 중복도를 만들고,
합동식 -n²q 경로와 교차 검증한다. p가 홀수 소수이면
르장드르 기호 특성화, 원소 개수 (p+1)/2, 중복도 {0 ↦ 1, 나머지 ↦ 2}를 점검한다.
"""

import logging
from collections import Counter

from src.schemas.lens import LensSpace
from src.schemas.report import Counterexample, SweepReport
from src.schemas.residue import SbarSet
from src.services.dinvariant_service import DInvariantService
from src.services.relative_service import RelativeService
from src.tools.modarith import is_prime, legendre, odd_primes_upto, units

logger = logging.getLogger(__name__)

# p = 2에서 상은 Z/2Z 전체가 된다 (개수/중복도 성질은 성립하지 않는다)
_P2_EXPECTED_MEMBERS = [0, 1]


class ResidueService:
    """f̄ 상 집합 계산 및 이차잉여 특성화 검증 서비스.

    Attributes:
        _d_service: spin 구조를 제공하는 서비스.
        _relative_service: f 표를 제공하는 서비스.
    """

    def __init__(
        self,
        d_service: DInvariantService | None = None,
        relative_service: RelativeService | None = None,
    ) -> None:
        self._d_service = d_service or DInvariantService()
        self._relative_service = relative_service or RelativeService(
            self._d_service,
        )

    def sbar(self, p: int, q: int) -> SbarSet:
        """L(p,q)의 f̄ 상 집합과 중복도를 계산한다.

        첫 번째 spin 구조 기준 f 표를 법 p로 줄여 만들고,
        {[-n²q]_p : n} 중복집합과 같은지 확인한다.
        합성수 p도 계산하지만 특성화는 적용하지 않는다.

        Args:
            p: 2 이상의 정수.
            q: p와 서로소인 q.

        Returns:
            SbarSet: 상 집합, 중복도, 특성화 일치 여부.

        Raises:
            ValueError: (p, q)가 유효한 렌즈 공간이 아닌 경우.
            RuntimeError: 두 경로의 결과가 다른 경우 (내부 오류).
        """
        if p < 2:
            raise ValueError(f"p는 2 이상이어야 합니다 (p={p}).")
        space = LensSpace(p=p, q=q)
        s = self._d_service.spin_structures(space).labels[0]
        table = self._relative_service.rel_f_table(space, s)

        counts = Counter(value % p for value in table.values)
        congruence = Counter((-n * n * q) % p for n in range(p))
        if counts != congruence:
            raise RuntimeError(
                f"{space.name}: f 표의 법 p 상이 -n²q 합동식 경로와 다릅니다."
            )

        members = sorted(counts)
        applies = p > 2 and is_prime(p)
        matches = None
        if applies:
            matches = members == self.residue_characterization(p, q)

        return SbarSet(
            p=p,
            q=q,
            members=members,
            multiplicity={a: counts[a] for a in members},
            is_prime=is_prime(p),
            characterization_applies=applies,
            matches_characterization=matches,
        )

    def residue_characterization(self, p: int, q: int) -> list[int]:
        """{a : a = 0 또는 (-a/p) = (q/p)}를 오름차순으로 반환한다.

        Args:
            p: 홀수 소수.
            q: p와 서로소인 q.

        Returns:
            list[int]: 특성화가 예측하는 상 집합.

        Raises:
            ValueError: p가 홀수 소수가 아니거나 q가 p의 배수인 경우.
        """
        if p == 2 or not is_prime(p):
            raise ValueError(f"특성화는 홀수 소수 p에서만 정의됩니다 (p={p}).")
        if q % p == 0:
            raise ValueError(f"q는 p와 서로소여야 합니다 (p={p}, q={q}).")
        target = legendre(q, p)
        return [a for a in range(p) if a == 0 or legendre(-a, p) == target]

    def verify_theorem2_and_corollary(self, p_max: int) -> SweepReport:
        """p <= p_max의 모든 홀수 소수와 모든 q에서 특성화와 개수 성질을 검증한다.

        (p, q)마다: 특성화 일치, 원소 개수 (p+1)/2, 0의 중복도 1,
        0이 아닌 원소의 중복도 2. p마다: 같은 제곱류의 q는 같은 상을 갖고,
        잉여/비잉여 상의 합집합은 Z/pZ, 교집합은 {0}.
        p = 2에서 상이 Z/2Z 전체인지도 기록한다.

        Args:
            p_max: 검증할 p의 상한 (3 이상).

        Returns:
            SweepReport: 반례가 없으면 ok가 True.

        Raises:
            ValueError: p_max < 3인 경우.
        """
        if p_max < 3:
            raise ValueError(f"p_max는 3 이상이어야 합니다 (p_max={p_max}).")

        report = SweepReport(suite="theorem2", p_max=p_max)
        logger.info("이차잉여 특성화 스윕 시작: p <= %d", p_max)

        p2 = self._safe_sbar(2, 1)
        report.record(2, self._check_p2(p2) if isinstance(p2, SbarSet) else [p2])

        for p in odd_primes_upto(p_max):
            by_class: dict[int, set[tuple[int, ...]]] = {1: set(), -1: set()}
            complete = True
            for q in units(p):
                sbar = self._safe_sbar(p, q)
                if not isinstance(sbar, SbarSet):
                    report.record(p, [sbar])
                    complete = False
                    continue
                by_class[legendre(q, p)].add(tuple(sbar.members))
                report.record(p, self._check_prime_case(sbar))
            # 계산에 실패한 q가 있으면 제곱류 비교는 건너뛴다
            if complete:
                report.record(p, self._check_dichotomy(p, by_class))

        report.notes = {
            "p2_members": p2.members if isinstance(p2, SbarSet) else None,
            "odd_primes_checked": len(odd_primes_upto(p_max)),
        }
        if report.counterexamples:
            logger.warning("특성화 반례 %d개 발견", len(report.counterexamples))
        logger.info(
            "이차잉여 특성화 스윕 완료: %d개 중 %d개 통과",
            report.checked, report.passed,
        )
        return report

    # --- Private methods ---

    def _safe_sbar(self, p: int, q: int) -> SbarSet | Counterexample:
        """sbar()를 호출하고 내부 오류는 반례로 바꿔 반환한다."""
        try:
            return self.sbar(p, q)
        except RuntimeError as e:
            logger.warning("상 집합 계산 실패 (p=%d, q=%d): %s", p, q, e)
            return Counterexample(params={"p": p, "q": q}, reason=str(e))

    def _check_prime_case(self, sbar: SbarSet) -> list[Counterexample]:
        """홀수 소수 p의 (p, q) 하나에 대해 특성화와 개수 성질을 점검한다."""
        p = sbar.p
        params = {"p": p, "q": sbar.q}
        failures: list[Counterexample] = []

        if not sbar.matches_characterization:
            failures.append(Counterexample(params=params, reason="르장드르 특성화 불일치"))
        if sbar.size != (p + 1) // 2:
            failures.append(Counterexample(
                params=params,
                reason=f"원소 개수 {sbar.size} != (p+1)/2 = {(p + 1) // 2}",
            ))
        # n = 0 외에 f̄ = 0이 되는 n이 없어야 한다
        if sbar.multiplicity[0] != 1:
            failures.append(Counterexample(params=params, reason="0의 중복도가 1이 아님"))
        doubled = [a for a in sbar.members if a != 0 and sbar.multiplicity[a] != 2]
        if doubled:
            failures.append(Counterexample(
                params={**params, "a": doubled[0]},
                reason="0이 아닌 원소의 중복도가 2가 아님",
            ))
        return failures

    def _check_dichotomy(
        self, p: int, by_class: dict[int, set[tuple[int, ...]]]
    ) -> list[Counterexample]:
        """제곱류 독립성과 잉여/비잉여 상의 합집합/교집합을 점검한다."""
        params = {"p": p}
        if len(by_class[1]) != 1 or len(by_class[-1]) != 1:
            return [Counterexample(params=params, reason="같은 제곱류의 q가 서로 다른 상을 가짐")]

        residue_set = set(next(iter(by_class[1])))
        nonresidue_set = set(next(iter(by_class[-1])))
        failures: list[Counterexample] = []
        if residue_set | nonresidue_set != set(range(p)):
            failures.append(Counterexample(params=params, reason="잉여/비잉여 상의 합집합이 Z/pZ가 아님"))
        if residue_set & nonresidue_set != {0}:
            failures.append(Counterexample(params=params, reason="잉여/비잉여 상의 교집합이 {0}이 아님"))
        return failures

    def _check_p2(self, sbar: SbarSet) -> list[Counterexample]:
        """p = 2에서 상이 Z/2Z 전체인지 점검한다."""
        if sbar.members != _P2_EXPECTED_MEMBERS:
            return [Counterexample(params={"p": 2, "q": 1}, reason="L(2,1)의 상이 Z/2Z가 아님")]
        return []


if __name__ == "__main__":
    """L(5,1), L(7,3), L(9,2)의 상 집합을 출력한다."""
    logging.basicConfig(level=logging.INFO)

    service = ResidueService()
    for p, q in ((5, 1), (7, 3), (9, 2), (2, 1)):
        sbar = service.sbar(p, q)
        print(
            f"L({p},{q}): {sbar.multiplicity} "
            f"(특성화 적용={sbar.characterization_applies}, 일치={sbar.matches_characterization})"
        )
