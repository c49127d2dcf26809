"""등차 함수 임계값 보조정리의 유한 전수 검증 서비스 모듈.

두 오라클을 numpy 격자로 계산한다.
- 단일 함수: H(i) = [h0 + i·n]_p가 모든 i에서 H(i) < C ⟺ i < C이면
  H는 항등 함수이거나 i ↦ C-1-i 이다.
- 함수 쌍: 단원 y, Y에 대해 [x+my]_p < C ⟺ [X+mY]_p < C가 모든 m에서
  성립하면 Y ≡ ±y이고, Y = y이면 X = x, Y = -y이면 X ≡ -x+C-1 이다.
"""

import logging
from collections import defaultdict
from collections.abc import Callable

import numpy as np

from src.schemas.lemma import LemmaCheck, StepFunctionSpec
from src.schemas.report import Counterexample, SweepReport
from src.tools.modarith import mod_inv, units

logger = logging.getLogger(__name__)

# 임계값 범위 [2, p-2]가 비어 있지 않은 최소 p
_MIN_P = 4


def canonical_step(n: int, p: int) -> int:
    """공차 n의 정규 대표원을 (-p/2, p/2]에서 반환한다.

    p가 짝수일 때 p/2는 +p/2로 둔다.
    """
    r = n % p
    return r - p if 2 * r > p else r


def _require_min_p(p: int) -> None:
    if p < _MIN_P:
        raise ValueError(f"p는 {_MIN_P} 이상이어야 합니다 (p={p}).")


class LemmaService:
    """등차 함수 보조정리 오라클 서비스."""

    def check_lemma4(self, p: int) -> LemmaCheck:
        """모든 (h0, n, C)에서 단일 함수 보조정리를 점검한다.

        만족하는 H가 항등 함수나 i ↦ C-1-i가 아니면 반례로 기록한다.
        C와 p-C 사이의 평행이동 대응 Ĥ(i) = H(i+C) - C도 함께 점검한다.

        Args:
            p: 4 이상의 법.

        Returns:
            LemmaCheck: C별 만족 개수와 반례.

        Raises:
            ValueError: p < 4인 경우.
        """
        _require_min_p(p)
        check = LemmaCheck(lemma="lemma4", p=p)

        steps = np.arange(p)
        labels = np.arange(p)
        # values[h0, r, i] = [h0 + i·r]_p
        values = (steps[:, None, None] + labels[None, None, :] * steps[None, :, None]) % p

        sats: dict[int, np.ndarray] = {}
        for C in range(2, p - 1):
            below = labels < C
            sat = ((values < C) == below[None, None, :]).all(axis=2)
            sats[C] = sat
            check.checked += p * p
            check.satisfying[C] = int(sat.sum())

            for h0, r in zip(*np.nonzero(sat)):
                h0, r = int(h0), int(r)
                if (h0, r) in ((0, 1), (C - 1, p - 1)):
                    continue
                check.counterexamples.append(Counterexample(
                    params={"p": p, "C": C, "h0": h0, "n": canonical_step(r, p)},
                    reason="항등 함수도 i ↦ C-1-i도 아닌 H가 조건을 만족함",
                ))

        for C, sat in sats.items():
            # Ĥ(i) = [h0 + C·r - C] + i·r, 임계값 p - C
            shifted = (steps[:, None] + C * steps[None, :] - C) % p
            reduced = sats[p - C][shifted, steps[None, :]]
            check.reduction_checked += p * p
            for h0, r in zip(*np.nonzero(sat != reduced)):
                check.counterexamples.append(Counterexample(
                    params={"p": p, "C": C, "h0": int(h0), "n": canonical_step(int(r), p)},
                    reason="임계값 C와 p-C 평행이동 대응이 성립하지 않음",
                ))
        return check

    def check_lemma5(self, p: int) -> LemmaCheck:
        """모든 (x, y, X, Y, C)에서 함수 쌍 보조정리를 점검한다.

        C마다 [x+my]_p < C 패턴이 같은 (x, y)끼리 묶는다.
        같은 묶음 안의 모든 순서쌍이 조건을 만족하는 조합이다.

        Args:
            p: 4 이상의 법.

        Returns:
            LemmaCheck: C별 만족 조합 수와 반례.

        Raises:
            ValueError: p < 4인 경우.
        """
        _require_min_p(p)
        check = LemmaCheck(lemma="lemma5", p=p)

        us = np.array(units(p))
        xs = np.arange(p)
        ms = np.arange(p)
        # values[x, k, m] = [x + m·us[k]]_p
        values = (xs[:, None, None] + ms[None, None, :] * us[None, :, None]) % p
        pairs = [(int(x), int(y)) for x in xs for y in us]

        for C in range(2, p - 1):
            patterns = (values < C).reshape(len(pairs), p)
            _, inverse = np.unique(patterns, axis=0, return_inverse=True)

            groups: dict[int, list[int]] = defaultdict(list)
            for index, group in enumerate(inverse.ravel()):
                groups[int(group)].append(index)

            check.checked += len(pairs) ** 2
            check.satisfying[C] = sum(len(g) ** 2 for g in groups.values())

            for members in groups.values():
                for a in members:
                    for b in members:
                        failure = self._pair_failure(p, C, pairs[a], pairs[b])
                        if failure is not None:
                            check.counterexamples.append(failure)
        return check

    def lemma4_rescaling_witness(
        self,
        x: int,
        y: int,
        X: int,
        Y: int,
        p: int,
        C: int | None = None,
    ) -> StepFunctionSpec:
        """m(i) = (i - x)·y'로 재매개화한 F(m) = [X + mY]_p를 등차 함수로 만든다.

        Args:
            x: 첫 함수의 절편.
            y: 첫 함수의 단원 기울기.
            X: 둘째 함수의 절편.
            Y: 둘째 함수의 단원 기울기.
            p: 법.
            C: 함께 담을 임계값 (선택).

        Returns:
            StepFunctionSpec: h0 = [X - x·y'·Y]_p, n = [y'·Y]_p의 정규 대표원.

        Raises:
            ValueError: y 또는 Y가 단원이 아닌 경우.
            RuntimeError: 재매개화 결과가 직접 계산과 다른 경우 (내부 오류).
        """
        y_inv = mod_inv(y, p)
        mod_inv(Y, p)

        spec = StepFunctionSpec(
            p=p,
            h0=(X - x * y_inv * Y) % p,
            n=canonical_step(y_inv * Y, p),
            C=C,
        )
        for i in range(p):
            m = ((i - x) * y_inv) % p
            if spec.evaluate(i) != (X + m * Y) % p:
                raise RuntimeError(f"재매개화 불일치 (p={p}, i={i}).")
        return spec

    def verify_lemma4(self, p_max: int) -> SweepReport:
        """4 <= p <= p_max 전체에서 단일 함수 보조정리를 검증한다."""
        return self._sweep("lemma4", p_max, self.check_lemma4)

    def verify_lemma5(self, p_max: int) -> SweepReport:
        """4 <= p <= p_max 전체에서 함수 쌍 보조정리를 검증한다."""
        return self._sweep("lemma5", p_max, self.check_lemma5)

    # --- Private methods ---

    def _sweep(
        self, suite: str, p_max: int, check_fn: Callable[[int], LemmaCheck]
    ) -> SweepReport:
        """p마다 오라클을 돌려 보고서에 누적한다."""
        report = SweepReport(suite=suite, p_max=p_max)
        satisfying: dict[int, dict[int, int]] = {}
        logger.info("%s 스윕 시작: p <= %d", suite, p_max)

        for p in range(_MIN_P, p_max + 1):
            check = check_fn(p)
            satisfying[p] = check.satisfying
            report.record(p, check.counterexamples)
            if not check.ok:
                logger.warning("%s: p=%d에서 반례 %d개", suite, p, len(check.counterexamples))

        report.notes = {"satisfying": satisfying}
        logger.info("%s 스윕 완료: %d개 중 %d개 통과", suite, report.checked, report.passed)
        return report

    def _pair_failure(
        self,
        p: int,
        C: int,
        first: tuple[int, int],
        second: tuple[int, int],
    ) -> Counterexample | None:
        """조건을 만족하는 (x, y), (X, Y) 쌍이 결론을 지키는지 점검한다."""
        (x, y), (X, Y) = first, second
        params = {"p": p, "C": C, "x": x, "y": y, "X": X, "Y": Y}
        if Y == y:
            if X != x:
                return Counterexample(params=params, reason="Y = y인데 X != x")
            return None
        if (Y + y) % p == 0:
            if (X + x - C + 1) % p != 0:
                return Counterexample(params=params, reason="Y = -y인데 X ≢ -x+C-1")
            return None
        return Counterexample(params=params, reason="Y ≢ ±y")


if __name__ == "__main__":
    """p = 7 오라클 결과와 재매개화 예시를 출력한다."""
    logging.basicConfig(level=logging.INFO)

    service = LemmaService()
    lemma4 = service.check_lemma4(7)
    print(f"단일 함수 (p=7): 만족 개수 {lemma4.satisfying}, 반례 {len(lemma4.counterexamples)}개")
    lemma5 = service.check_lemma5(7)
    print(f"함수 쌍 (p=7): 만족 개수 {lemma5.satisfying}, 반례 {len(lemma5.counterexamples)}개")
    print(f"재매개화: {service.lemma4_rescaling_witness(1, 2, 3, 5, 7)}")
