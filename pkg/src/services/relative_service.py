"""상대 d-invariant f(s, n) 비즈니스 로직 서비스 모듈.

spin 구조 s에서 정규화한 정수값 함수 f(s, n) = p·d(s+nq) - p·d(s)를 만들고,
f(s,0) = 0, 단계 점화식, f(s,n) ≡ -n²q (mod p) 성질을 점검한다.
두 렌즈 공간의 f 표를 재색인하여 g 함수의 일관성도 판정한다.
"""

import logging
from functools import lru_cache

from src.schemas.classify import TorsorIso
from src.schemas.lens import GFunctionReport, LensSpace, RecursionCheck, RelFnTable
from src.schemas.report import Counterexample, SweepReport
from src.services.dinvariant_service import DInvariantService
from src.tools.modarith import mod_inv, units

logger = logging.getLogger(__name__)

# (p, q, s)별 f 표 캐시 크기
_REL_CACHE_SIZE = 1024


class RelativeService:
    """상대 불변량 f(s, n) 생성 및 검증 서비스.

    Attributes:
        _d_service: d 표를 제공하는 DInvariantService.
        _rel_tables: (p, q, s) → 점검을 통과한 f 표.
    """

    def __init__(self, d_service: DInvariantService | None = None) -> None:
        """RelativeService를 초기화한다.

        Args:
            d_service: 공유할 DInvariantService (None이면 새로 만든다).
        """
        self._d_service = d_service or DInvariantService()
        self._rel_tables = lru_cache(maxsize=_REL_CACHE_SIZE)(
            self._build_rel_f_table,
        )

    def rel_f_table(self, space: LensSpace, s: int) -> RelFnTable:
        """spin 구조 s 기준 f(s, 0..p-1) 정수 표를 만든다.

        반환 전에 정수성, f(s,0) = 0, 단계 점화식, 합동식을 모두 점검한다.

        Args:
            space: 대상 렌즈 공간.
            s: spin 구조 라벨.

        Returns:
            RelFnTable: 길이 p의 정수 표.

        Raises:
            ValueError: s가 spin 구조가 아닌 경우.
            RuntimeError: f가 정수가 아니거나 성질이 깨진 경우 (내부 오류).
        """
        spin = self._d_service.spin_structures(space)
        if s not in spin:
            raise ValueError(
                f"{s}은(는) {space.name}의 spin 구조가 아닙니다 "
                f"(spin 구조: {list(spin.labels)})."
            )
        return self._rel_tables(space.p, space.q, s)

    def check_rel_recursion(self, table: RelFnTable) -> RecursionCheck:
        """f(s, n+1) = f(s, n) + p - 1 - 2[s + nq]_p를 n = 0..p-1에서 점검한다.

        n = p-1에서는 f(s, p) = f(s, 0) = 0으로 되돌아오는지 확인한다.

        Args:
            table: 점검할 f 표.

        Returns:
            RecursionCheck: 통과 여부와 처음 실패한 n.
        """
        p, q, s = table.space.p, table.space.q, table.s
        f = table.values
        for n in range(p):
            expected = f[n] + p - 1 - 2 * ((s + n * q) % p)
            if f[(n + 1) % p] != expected:
                return RecursionCheck(passed=False, checked=p, first_failure=n)
        return RecursionCheck(passed=True, checked=p)

    def g_function(
        self,
        space1: LensSpace,
        s1: int,
        space2: LensSpace,
        s2: int,
        u: int,
    ) -> GFunctionReport:
        """g(m) = f_1(s_1, m q')와 g(m) = f_2(s_2, m u' q')의 일치 여부를 판정한다.

        q는 첫 번째 공간의 q1이다.

        Args:
            space1: 첫 번째 렌즈 공간 L(p, q1).
            s1: space1의 spin 구조.
            space2: 두 번째 렌즈 공간 L(p, q2).
            s2: space2의 spin 구조.
            u: 재색인 단원.

        Returns:
            GFunctionReport: 일치 여부와 두 이동 관계 성립 여부.

        Raises:
            ValueError: p가 다르거나, u가 단원이 아니거나, s_i가 spin 구조가 아닌 경우.
        """
        if space1.p != space2.p:
            raise ValueError(
                f"같은 p끼리만 비교할 수 있습니다 ({space1.name}, {space2.name})."
            )
        p, q = space1.p, space1.q
        u_inv = mod_inv(u, p)
        q_inv = mod_inv(q, p)

        f1 = self.rel_f_table(space1, s1).values
        f2 = self.rel_f_table(space2, s2).values

        g1 = [f1[(m * q_inv) % p] for m in range(p)]
        g2 = [f2[(m * u_inv * q_inv) % p] for m in range(p)]

        first_disagreement = next(
            (m for m in range(p) if g1[m] != g2[m]), None,
        )
        step_q = all(
            g1[(m + q) % p] == g1[m] + p - 1 - 2 * ((s1 + m) % p)
            for m in range(p)
        )
        step_uq = all(
            g2[(m + u * q) % p] == g2[m] + p - 1 - 2 * ((s2 + m * u) % p)
            for m in range(p)
        )

        return GFunctionReport(
            p=p,
            q1=q,
            q2=space2.q,
            s1=s1,
            s2=s2,
            u=u % p,
            agree=first_disagreement is None,
            first_disagreement=first_disagreement,
            g_values=g1,
            step_relation_q=step_q,
            step_relation_uq=step_uq,
        )

    def check_transport(
        self, space1: LensSpace, space2: LensSpace, iso: TorsorIso
    ) -> bool:
        """증인 동형 아래에서 f 표가 옮겨지는지 점검한다.

        s1이 spin이고 s2 = iso(s1)도 spin일 때
        f_1(s_1, n) = f_2(s_2, [u q1 q2' n]_p)가 모든 n에서 성립해야 한다.

        Args:
            space1: 첫 번째 렌즈 공간.
            space2: 두 번째 렌즈 공간.
            iso: d를 보존하는 증인 동형.

        Returns:
            spin → spin 쌍이 하나 이상 있고 모든 쌍에서 성립하면 True.
        """
        p = space1.p
        spin1 = self._d_service.spin_structures(space1).labels
        spin2 = self._d_service.spin_structures(space2).labels
        scale = (iso.u * space1.q * mod_inv(space2.q, p)) % p

        pairs = [(s1, iso.apply(s1)) for s1 in spin1 if iso.apply(s1) in spin2]
        if not pairs:
            return False
        for s1, s2 in pairs:
            f1 = self.rel_f_table(space1, s1).values
            f2 = self.rel_f_table(space2, s2).values
            if any(f1[n] != f2[(scale * n) % p] for n in range(p)):
                return False
        return True

    def verify_lemma3_suite(self, p_max: int) -> SweepReport:
        """p <= p_max의 모든 서로소 (p, q)와 spin 구조에서 f 성질을 검증한다.

        Args:
            p_max: 검증할 p의 상한 (2 이상).

        Returns:
            SweepReport: 반례가 없으면 ok가 True.
        """
        report = SweepReport(suite="lemma3", p_max=p_max)
        logger.info("상대 불변량 스윕 시작: p <= %d", p_max)

        for p in range(2, p_max + 1):
            for q in units(p):
                space = LensSpace(p=p, q=q)
                for s in self._d_service.spin_structures(space).labels:
                    report.record(p, self._check_spin_choice(space, s))

        logger.info(
            "상대 불변량 스윕 완료: %d개 중 %d개 통과",
            report.checked, report.passed,
        )
        return report

    # --- Private methods ---

    def _build_rel_f_table(self, p: int, q: int, s: int) -> RelFnTable:
        """공통 분모 d 행에서 f 표를 정수 연산으로 만들고 성질을 점검한다."""
        space = LensSpace(p=p, q=q)
        den, nums = self._d_service.scaled_row(space)
        base = nums[s]

        values: list[int] = []
        for n in range(p):
            scaled = p * (nums[(s + n * q) % p] - base)
            value, remainder = divmod(scaled, den)
            if remainder != 0:
                raise RuntimeError(
                    f"{space.name}, s={s}, n={n}: f가 정수가 아닙니다 ({scaled}/{den})."
                )
            values.append(value)

        rel = RelFnTable(space=space, s=s, values=values)

        recursion = self.check_rel_recursion(rel)
        if not recursion.passed:
            raise RuntimeError(
                f"{space.name}, s={s}: 단계 점화식 위반 (n={recursion.first_failure})."
            )
        congruence_failure = self._first_congruence_failure(rel)
        if congruence_failure is not None:
            raise RuntimeError(
                f"{space.name}, s={s}: f ≢ -n²q (n={congruence_failure})."
            )
        return rel

    def _check_spin_choice(
        self, space: LensSpace, s: int
    ) -> list[Counterexample]:
        """한 (공간, spin 구조) 조합의 f 표 성질을 반례 목록으로 점검한다."""
        params = {"p": space.p, "q": space.q, "s": s}
        try:
            table = self.rel_f_table(space, s)
        except RuntimeError as e:
            logger.warning("f 표 구성 실패: %s", e)
            return [Counterexample(params=params, reason=str(e))]

        if not self.check_rel_recursion(table).passed:
            return [Counterexample(params=params, reason="단계 점화식 위반")]
        return []

    def _first_congruence_failure(self, table: RelFnTable) -> int | None:
        """f(s, n) ≡ -n²q (mod p)가 처음 깨지는 n을 반환한다."""
        p, q = table.space.p, table.space.q
        for n, value in enumerate(table.values):
            if (value + n * n * q) % p != 0:
                return n
        return None


if __name__ == "__main__":
    """L(5,1)의 f 표와 L(7,2)/L(7,4)의 g 함수 일치 여부를 출력한다."""
    logging.basicConfig(level=logging.INFO)

    service = RelativeService()
    table = service.rel_f_table(LensSpace(p=5, q=1), 0)
    print(f"f(L(5,1), s=0) = {table.values}")

    report = service.g_function(
        LensSpace(p=7, q=2), 4, LensSpace(p=7, q=4), 5, 3,
    )
    print(f"g 함수 (L(7,2), L(7,4), u=3): agree={report.agree}")
