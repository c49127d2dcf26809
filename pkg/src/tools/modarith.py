"""정확한 모듈러 연산 및 유리수 연산 기본 도구 모듈.

[a]_p 대표원, 확장 유클리드 역원, 르장드르 기호, 브래킷 합의
wrap 판정 등 다른 모든 모듈이 사용하는 순수 함수만 담는다.
비즈니스 로직(표 생성, 분류, 검증) 없이 산술만 담당한다.
부동소수점은 어디에서도 사용하지 않는다.
"""

import logging
from fractions import Fraction
from math import gcd, isqrt
from typing import Literal

logger = logging.getLogger(__name__)

# d-invariant 값은 모두 정확한 유리수로 다룬다
Rational = Fraction

# [a]_p: 구간 [0, p)의 정수 대표원 (법 p는 호출 측이 함께 들고 다닌다)
Residue = int

BracketCase = Literal["no-wrap", "wrap"]


def _require_modulus(p: int) -> None:
    """법 p가 양의 정수인지 확인한다.

    Args:
        p: 법.

    Raises:
        ValueError: p < 1인 경우.
    """
    if p < 1:
        raise ValueError(f"법 p는 1 이상이어야 합니다 (p={p}).")


def mod_rep(a: int, p: int) -> Residue:
    """a의 법 p 대표원 [a]_p를 구간 [0, p)에서 반환한다.

    음수 a에 대해서도 0 <= r < p를 만족한다.

    Args:
        a: 임의의 정수.
        p: 법 (1 이상).

    Returns:
        0 <= r < p이고 r ≡ a (mod p)인 유일한 정수 r.

    Raises:
        ValueError: p < 1인 경우.
    """
    _require_modulus(p)
    return a % p


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """확장 유클리드 알고리즘으로 (g, x, y)를 반환한다.

    a*x + b*y = g = gcd(a, b)를 만족한다.

    Args:
        a: 정수.
        b: 정수.

    Returns:
        tuple[int, int, int]: (g, x, y).
    """
    x0, x1, y0, y1 = 0, 1, 1, 0
    while a != 0:
        quotient, b, a = b // a, a, b % a
        y0, y1 = y1, y0 - quotient * y1
        x0, x1 = x1, x0 - quotient * x1
    return b, x0, y0


def mod_inv(a: int, p: int) -> Residue:
    """a의 법 p 역원 a'을 반환한다 (a * a' ≡ 1 mod p).

    Args:
        a: 역원을 구할 정수.
        p: 법 (1 이상, 소수일 필요 없음).

    Returns:
        [0, p) 구간의 역원.

    Raises:
        ValueError: p < 1이거나 gcd(a, p) != 1인 경우.
    """
    _require_modulus(p)
    g, x, _ = xgcd(a % p, p)
    if g != 1:
        raise ValueError(
            f"{a}은(는) 법 {p}에서 역원이 없습니다 (gcd={gcd(a, p)})."
        )
    return x % p


def units(p: int) -> list[Residue]:
    """법 p의 단원(unit) 대표원 목록을 오름차순으로 반환한다.

    Args:
        p: 법 (1 이상).

    Returns:
        gcd(u, p) = 1인 u in [0, p) 리스트.
    """
    _require_modulus(p)
    return [u for u in range(p) if gcd(u, p) == 1]


def is_prime(n: int) -> bool:
    """작은 범위(스윕 상한 수준)에서 결정론적 시행 나눗셈으로 소수 판정한다.

    Args:
        n: 판정할 정수.

    Returns:
        n이 소수이면 True.
    """
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def odd_primes_upto(limit: int) -> list[int]:
    """limit 이하의 홀수 소수를 오름차순으로 반환한다."""
    return [n for n in range(3, limit + 1, 2) if is_prime(n)]


def _require_odd_prime(p: int) -> None:
    """p가 홀수 소수인지 확인한다.

    Raises:
        ValueError: p가 홀수 소수가 아닌 경우.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"p는 홀수 소수여야 합니다 (p={p}).")


def legendre(m: int, p: int) -> int:
    """오일러 판정법으로 르장드르 기호 (m/p)를 계산한다.

    Args:
        m: 임의의 정수.
        p: 홀수 소수.

    Returns:
        m이 0이 아닌 제곱잉여이면 1, 비잉여이면 -1, p | m이면 0.

    Raises:
        ValueError: p가 홀수 소수가 아닌 경우.
    """
    _require_odd_prime(p)
    symbol = pow(m % p, (p - 1) // 2, p)
    return -1 if symbol == p - 1 else symbol


def legendre_by_squares(m: int, p: int) -> int:
    """모든 제곱을 나열하여 르장드르 기호를 계산한다.

    legendre()의 교차 검증용 오라클이다.

    Args:
        m: 임의의 정수.
        p: 홀수 소수.

    Returns:
        1, -1, 0 중 하나.

    Raises:
        ValueError: p가 홀수 소수가 아닌 경우.
    """
    _require_odd_prime(p)
    if m % p == 0:
        return 0
    squares = {(x * x) % p for x in range(1, p)}
    return 1 if m % p in squares else -1


def bracket_sum_case(x: int, y: int, p: int) -> BracketCase:
    """[X+Y]_p가 [X]_p + [Y]_p에서 p를 빼야 하는지 판정한다.

    [X]_p < p - [Y]_p이면 "no-wrap" ([X+Y]_p = [X]_p + [Y]_p),
    그렇지 않으면 "wrap" ([X+Y]_p = [X]_p + [Y]_p - p).

    Args:
        x: 첫 번째 정수 X.
        y: 두 번째 정수 Y.
        p: 법 (1 이상).

    Returns:
        "no-wrap" 또는 "wrap".

    Raises:
        ValueError: p < 1인 경우.
    """
    if mod_rep(x, p) < p - mod_rep(y, p):
        return "no-wrap"
    return "wrap"


def bracket_sum(x: int, y: int, p: int) -> Residue:
    """bracket_sum_case의 분기 공식으로 [X+Y]_p를 재구성한다."""
    total = mod_rep(x, p) + mod_rep(y, p)
    if bracket_sum_case(x, y, p) == "wrap":
        total -= p
    return total


def format_rational(value: Fraction) -> str:
    """유리수를 "num/den" 문자열로 직렬화한다 (정수도 "/1"을 붙인다)."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """num/den 형식 또는 정수 문자열을 정확한 유리수로 역직렬화한다.

    Raises:
        ValueError: 유리수로 해석할 수 없는 문자열인 경우.
    """
    return Fraction(text.strip())


if __name__ == "__main__":
    """기본 연산 예시를 출력한다."""
    logging.basicConfig(level=logging.INFO)

    print(f"[-3]_5 = {mod_rep(-3, 5)}")
    print(f"3^-1 mod 7 = {mod_inv(3, 7)}")
    print(f"(2/7) = {legendre(2, 7)}, (3/7) = {legendre(3, 7)}")
    print(f"bracket_sum_case(3, 4, 5) = {bracket_sum_case(3, 4, 5)}")
    print(f"units(12) = {units(12)}")
    print(f"-1/2 → {format_rational(Fraction(-1, 2))}")
