"""렌즈 공간 쌍의 위상동형/호몰로지 코보디즘 판정 서비스 모듈.

방향 보존 위상동형 판정, d를 보존하는 아핀 토르소르 동형 전수 탐색,
단원 제약 점검, 네 브래킷 항등식 점검, p <= p_max 전수 검증 스윕을 제공한다.
탐색은 numpy 정수 코드 배열로 벡터화하며 값 비교는 정확한 유리수 기준이다.
"""

import logging
from collections import Counter
from fractions import Fraction

import numpy as np

from src.schemas.classify import ClassificationVerdict, KeyIdentityReport, TorsorIso
from src.schemas.lens import LensSpace
from src.schemas.report import Counterexample, SweepReport
from src.services.dinvariant_service import DInvariantService
from src.services.relative_service import RelativeService
from src.tools.modarith import bracket_sum_case, units

logger = logging.getLogger(__name__)


class ClassifyService:
    """렌즈 공간 쌍 분류 및 분류 정리 검증 서비스.

    Attributes:
        _d_service: d 표와 spin 구조를 제공하는 서비스.
        _relative_service: f 표와 수송 점검을 제공하는 서비스.
    """

    def __init__(
        self,
        d_service: DInvariantService | None = None,
        relative_service: RelativeService | None = None,
    ) -> None:
        """ClassifyService를 초기화한다.

        Args:
            d_service: 공유할 DInvariantService.
            relative_service: 공유할 RelativeService.
        """
        self._d_service = d_service or DInvariantService()
        self._relative_service = relative_service or RelativeService(
            self._d_service,
        )

    def homeomorphic(self, p: int, q1: int, q2: int) -> bool:
        """L(p,q1)과 L(p,q2)가 방향 보존 위상동형인지 판정한다.

        Args:
            p: 공통 p.
            q1: 첫 번째 q.
            q2: 두 번째 q.

        Returns:
            q1 ≡ q2 또는 q1·q2 ≡ 1 (mod p)이면 True.

        Raises:
            ValueError: 렌즈 공간 매개변수가 유효하지 않은 경우.
        """
        LensSpace(p=p, q=q1)
        LensSpace(p=p, q=q2)
        return (q1 - q2) % p == 0 or (q1 * q2) % p == 1

    def torsor_iso_search(
        self,
        p: int,
        q1: int,
        q2: int,
        require_spin_compat: bool = True,
    ) -> list[TorsorIso]:
        """d_2([c + u·i]_p) = d_1(i)를 만족하는 모든 아핀 동형을 찾는다.

        p·φ(p)개의 (c, u)를 전부 시험한다.
        require_spin_compat이면 spin 구조 집합을 spin 구조 집합 안으로
        보내는 사상만 남긴다.

        Args:
            p: 공통 p.
            q1: 첫 번째 q.
            q2: 두 번째 q.
            require_spin_compat: spin 호환 조건 적용 여부.

        Returns:
            list[TorsorIso]: (u, c) 오름차순 증인 목록.
        """
        space1, space2 = LensSpace(p=p, q=q1), LensSpace(p=p, q=q2)
        witnesses = self._search(space1, space2)
        if require_spin_compat:
            return self._spin_compatible(space1, space2, witnesses)
        return witnesses

    def classify(
        self,
        p: int,
        q1: int,
        q2: int,
        require_spin_compat: bool = True,
    ) -> ClassificationVerdict:
        """위상동형 판정과 d 보존 동형 탐색을 묶어 판정 결과를 만든다.

        Args:
            p: 공통 p.
            q1: 첫 번째 q.
            q2: 두 번째 q.
            require_spin_compat: d_iso_exists 판정에 spin 호환을 요구할지 여부.

        Returns:
            ClassificationVerdict: 판정 결과와 증인 목록.
        """
        space1, space2 = LensSpace(p=p, q=q1), LensSpace(p=p, q=q2)
        homeomorphic = self.homeomorphic(p, q1, q2)
        witnesses = self._search(space1, space2)
        spin_witnesses = self._spin_compatible(space1, space2, witnesses)

        d_iso_exists = bool(spin_witnesses if require_spin_compat else witnesses)
        return ClassificationVerdict(
            space1=space1,
            space2=space2,
            require_spin_compat=require_spin_compat,
            homeomorphic=homeomorphic,
            d_iso_exists=d_iso_exists,
            unrestricted_iso_exists=bool(witnesses),
            agreement=homeomorphic == d_iso_exists,
            witnesses=witnesses,
            spin_compatible_witnesses=spin_witnesses,
        )

    def unit_constraint_check(
        self, p: int, q1: int, q2: int, iso: TorsorIso
    ) -> bool:
        """증인의 단원 u가 q2 ≡ u²·q1 (mod p)을 만족하는지 점검한다."""
        return (q2 - iso.u * iso.u * q1) % p == 0

    def unit_reflection_check(self, p: int, q1: int, iso: TorsorIso) -> bool:
        """증인의 단원 u가 u ≡ ±1 또는 u·q1 ≡ ±1 (mod p)인지 점검한다."""
        return iso.u % p in (1, p - 1) or (iso.u * q1) % p in (1, p - 1)

    def homeomorphism_classes(self, p: int) -> list[list[int]]:
        """법 p의 단원 q들을 위상동형 관계로 분할한다.

        Args:
            p: 2 이상의 정수.

        Returns:
            list[list[int]]: 각 동치류 (오름차순), 최솟값 기준 정렬.
        """
        classes: list[list[int]] = []
        assigned: set[int] = set()
        for q in units(p):
            if q in assigned:
                continue
            members = [r for r in units(p) if self.homeomorphic(p, q, r)]
            assigned.update(members)
            classes.append(members)
        return classes

    def check_key_identity(
        self, p: int, q: int, s1: int, s2: int, u: int
    ) -> KeyIdentityReport:
        """네 브래킷 항등식과 임계값 동치를 모든 m에서 비교한다.

        항등식은 직접 계산하고, 동치는 bracket_sum_case로 판정한다.

        Args:
            p: 법.
            q: 첫 번째 공간의 q.
            s1: 첫 번째 spin 구조.
            s2: 두 번째 spin 구조.
            u: 단원.

        Returns:
            KeyIdentityReport: 성립 개수와 점별 일치 여부.
        """
        identity_count = 0
        equivalence_count = 0
        pointwise_agree = True
        for m in range(p):
            lhs = (s1 + m) % p + (s2 + (m + q) * u) % p
            rhs = (s2 + m * u) % p + (s1 + m + u * q) % p
            identity = lhs == rhs

            first = bracket_sum_case(s1 + m, u * q, p) == "no-wrap"
            second = bracket_sum_case(s2 + m * u, u * q, p) == "no-wrap"
            equivalence = first == second

            identity_count += identity
            equivalence_count += equivalence
            pointwise_agree = pointwise_agree and identity == equivalence

        return KeyIdentityReport(
            p=p,
            q=q,
            s1=s1,
            s2=s2,
            u=u % p,
            identity_count=identity_count,
            equivalence_count=equivalence_count,
            identity_all=identity_count == p,
            pointwise_agree=pointwise_agree,
        )

    def verify_theorem1(self, p_max: int) -> SweepReport:
        """p <= p_max의 모든 서로소 쌍에서 분류 정리를 전수 검증한다.

        쌍마다 점검:
        1. spin 호환 d 보존 동형 존재 ⟺ 위상동형
        2. 모든 spin 호환 증인이 q2 ≡ u²q1, (u ≡ ±1 또는 uq1 ≡ ±1) 만족
        3. 증인이 실현하는 spin 쌍마다 네 브래킷 항등식과 동치의 일치
        4. 증인 아래 f 표 수송
        5. 증인과 L(p,q1)의 자기 동형을 합성해도 증인 (합성 닫힘)

        spin 조건 없는 판정이 달라지는 쌍은 notes에 실험 결과로만 기록한다.

        Args:
            p_max: 검증할 p의 상한 (2 이상).

        Returns:
            SweepReport: 반례가 없으면 ok가 True.
        """
        report = SweepReport(suite="theorem1", p_max=p_max)
        unrestricted_differs: list[list[int]] = []
        witness_count = 0
        logger.info("분류 정리 스윕 시작: p <= %d", p_max)

        for p in range(2, p_max + 1):
            qs = units(p)
            for q1 in qs:
                space1 = LensSpace(p=p, q=q1)
                self_witnesses = self._search(space1, space1)
                for q2 in qs:
                    verdict = self.classify(p, q1, q2)
                    failures = self._check_verdict(verdict, self_witnesses)
                    witness_count += len(verdict.spin_compatible_witnesses)
                    if verdict.unrestricted_iso_exists != verdict.d_iso_exists:
                        unrestricted_differs.append([p, q1, q2])
                    report.record(p, failures)
            logger.info("p=%d 완료 (누적 반례 %d개)", p, len(report.counterexamples))

        report.notes = {
            "spin_compatible_witnesses_checked": witness_count,
            "unrestricted_verdict_differs": unrestricted_differs,
        }
        if report.counterexamples:
            logger.warning("분류 정리 반례 %d개 발견", len(report.counterexamples))
        return report

    def verify_key_identity(self, p_max: int) -> SweepReport:
        """네 브래킷 항등식과 임계값 동치의 점별 일치를 넓은 범위에서 검증한다.

        p <= p_max, 모든 q, 모든 단원 u, L(p,q)의 spin 구조 s1,
        L(p, [u²q]_p)의 spin 구조 s2 조합을 numpy 격자로 점검한다.
        (p, q)마다 첫 조합 하나는 check_key_identity로 교차 검증한다.

        Args:
            p_max: 검증할 p의 상한 (2 이상).

        Returns:
            SweepReport: notes에 항등식이 모든 m에서 성립한 조합 수를 기록한다.
        """
        report = SweepReport(suite="key_identity", p_max=p_max)
        identity_all_count = 0
        logger.info("네 브래킷 항등식 스윕 시작: p <= %d", p_max)

        for p in range(2, p_max + 1):
            us = np.array(units(p))
            for q in units(p):
                spin1 = self._d_service.spin_structures(LensSpace(p=p, q=q)).labels
                for s1 in spin1:
                    for s2 in self._spin_label_arrays(p, (us * us * q) % p):
                        identity, equivalence = self._key_identity_grid(
                            p, q, s1, s2, us,
                        )
                        failures = [
                            Counterexample(
                                params={
                                    "p": p, "q": q, "s1": s1,
                                    "s2": int(s2[k]), "u": int(us[k]),
                                },
                                reason="항등식 성립과 임계값 동치가 점별로 다름",
                            )
                            for k in np.flatnonzero((identity != equivalence).any(axis=1))
                        ]

                        scalar = self.check_key_identity(
                            p, q, s1, int(s2[0]), int(us[0]),
                        )
                        if scalar.identity_count != int(identity[0].sum()):
                            failures.append(Counterexample(
                                params={"p": p, "q": q, "s1": s1, "s2": int(s2[0])},
                                reason="격자 계산과 bracket_sum_case 계산 불일치",
                            ))

                        identity_all_count += int(identity.all(axis=1).sum())
                        report.record(p, failures)

        report.notes = {"identity_all_configurations": identity_all_count}
        logger.info(
            "네 브래킷 항등식 스윕 완료: %d개 중 %d개 통과",
            report.checked, report.passed,
        )
        return report

    # --- Private methods ---

    def _key_identity_grid(
        self, p: int, q: int, s1: int, s2: np.ndarray, us: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray]:
        """(u, m) 격자에서 항등식 성립 여부와 임계값 동치 성립 여부를 계산한다.

        s2[k]는 us[k]와 짝을 이룬다. 두 배열 모두 shape (len(us), p).
        """
        u = us[:, None]
        s2 = s2[:, None]
        m = np.arange(p)[None, :]

        first = (s1 + m) % p
        second = (s2 + m * u) % p
        shift = (u * q) % p

        identity = first + (s2 + (m + q) * u) % p == second + (s1 + m + u * q) % p
        equivalence = (first < p - shift) == (second < p - shift)
        return identity, equivalence

    def _spin_label_arrays(self, p: int, qs: np.ndarray) -> list[np.ndarray]:
        """q 배열 각각에 대한 spin 구조 라벨 배열을 반환한다.

        p가 홀수면 배열 1개, 짝수면 (q-1)/2 쪽과 (p+q-1)/2 쪽 2개.
        """
        low, high = qs - 1, p + qs - 1
        if p % 2:
            return [np.where(low % 2 == 0, low // 2, high // 2) % p]
        return [(low // 2) % p, (high // 2) % p]

    def _search(
        self, space1: LensSpace, space2: LensSpace
    ) -> list[TorsorIso]:
        """spin 조건 없이 d를 보존하는 모든 아핀 동형을 찾는다.

        서로 다른 유리수 값마다 정수 코드를 붙여 numpy로 비교한다.
        코드가 같다 ⟺ 값이 정확히 같다.
        """
        p = space1.p
        values1 = self._d_service.d_table(space1).values
        values2 = self._d_service.d_table(space2).values

        # 값의 중복집합이 다르면 어떤 전단사도 d를 보존할 수 없다
        if Counter(values1) != Counter(values2):
            return []

        codes: dict[Fraction, int] = {}
        code1 = np.array([codes.setdefault(v, len(codes)) for v in values1])
        code2 = np.array([codes.setdefault(v, len(codes)) for v in values2])

        labels = np.arange(p)
        witnesses: list[TorsorIso] = []
        for u in units(p):
            # idx[c, i] = [c + u·i]_p
            idx = (labels[:, None] + u * labels[None, :]) % p
            matches = (code2[idx] == code1[None, :]).all(axis=1)
            for c in np.flatnonzero(matches):
                witnesses.append(TorsorIso(p=p, c=int(c), u=u))
        return witnesses

    def _spin_compatible(
        self,
        space1: LensSpace,
        space2: LensSpace,
        witnesses: list[TorsorIso],
    ) -> list[TorsorIso]:
        """spin 구조 집합을 spin 구조 집합 안으로 보내는 증인만 남긴다."""
        spin1 = self._d_service.spin_structures(space1).labels
        spin2 = set(self._d_service.spin_structures(space2).labels)
        return [
            iso for iso in witnesses
            if {iso.apply(s) for s in spin1} <= spin2
        ]

    def _check_verdict(
        self,
        verdict: ClassificationVerdict,
        self_witnesses: list[TorsorIso] | None = None,
    ) -> list[Counterexample]:
        """판정 하나에 대해 분류 정리와 증인 성질을 점검한다.

        self_witnesses가 주어지면 L(p,q1)의 d 보존 자기 동형 φ와 증인 ψ의
        합성 ψ∘φ가 다시 증인 목록에 있는지도 점검한다.
        """
        space1, space2 = verdict.space1, verdict.space2
        p, q1, q2 = space1.p, space1.q, space2.q
        params = {"p": p, "q1": q1, "q2": q2}
        failures: list[Counterexample] = []

        if not verdict.agreement:
            failures.append(Counterexample(
                params=params,
                reason=(
                    f"위상동형={verdict.homeomorphic}, "
                    f"spin 호환 d 동형 존재={verdict.d_iso_exists}"
                ),
            ))

        spin1 = self._d_service.spin_structures(space1).labels
        for iso in verdict.spin_compatible_witnesses:
            witness_params = {**params, "c": iso.c, "u": iso.u}
            if not self.unit_constraint_check(p, q1, q2, iso):
                failures.append(Counterexample(
                    params=witness_params, reason="q2 ≢ u²q1",
                ))
            if not self.unit_reflection_check(p, q1, iso):
                failures.append(Counterexample(
                    params=witness_params, reason="u ≢ ±1 이고 uq1 ≢ ±1",
                ))
            for s1 in spin1:
                key = self.check_key_identity(p, q1, s1, iso.apply(s1), iso.u)
                if not (key.identity_all and key.pointwise_agree):
                    failures.append(Counterexample(
                        params={**witness_params, "s1": s1},
                        reason="네 브래킷 항등식 또는 임계값 동치 위반",
                    ))
            if not self._relative_service.check_transport(space1, space2, iso):
                failures.append(Counterexample(
                    params=witness_params, reason="증인 아래 f 표 수송 실패",
                ))

        witness_set = set(verdict.witnesses)
        for psi in verdict.witnesses:
            for phi in self_witnesses or []:
                composed = psi.compose(phi)
                if composed not in witness_set:
                    failures.append(Counterexample(
                        params={
                            **params, "c": psi.c, "u": psi.u,
                            "self_c": phi.c, "self_u": phi.u,
                        },
                        reason="자기 동형과 합성한 증인이 증인 목록에 없음",
                    ))
        return failures


if __name__ == "__main__":
    """예시 쌍의 분류 결과와 p=5 위상동형 류를 출력한다."""
    logging.basicConfig(level=logging.INFO)

    service = ClassifyService()
    for q1, q2 in ((2, 4), (1, 2)):
        verdict = service.classify(7, q1, q2)
        print(
            f"L(7,{q1}) vs L(7,{q2}): 위상동형={verdict.homeomorphic}, "
            f"증인={[(w.c, w.u) for w in verdict.spin_compatible_witnesses]}"
        )
    print(f"p=5 위상동형 류: {service.homeomorphism_classes(5)}")
