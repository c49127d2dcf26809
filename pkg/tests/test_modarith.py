"""modarith 기본 산술 도구 테스트 모듈.

대표원, 역원, 르장드르 기호, 브래킷 합 wrap 판정, 유리수 직렬화를 검증한다.
"""

import random
from fractions import Fraction

import pytest

from src.tools.modarith import (
    bracket_sum,
    bracket_sum_case,
    format_rational,
    is_prime,
    legendre,
    legendre_by_squares,
    mod_inv,
    mod_rep,
    odd_primes_upto,
    parse_rational,
    units,
    xgcd,
)


class TestModRep:
    """mod_rep 함수 테스트."""

    @pytest.mark.parametrize(
        ("a", "p", "expected"),
        [(-3, 5, 2), (7, 7, 0), (12, 5, 2), (-1, 2, 1), (0, 1, 0)],
    )
    def test_representative(self, a: int, p: int, expected: int) -> None:
        """[0, p) 범위의 대표원을 반환한다."""
        assert mod_rep(a, p) == expected

    def test_sign_symmetry_exhaustive(self) -> None:
        """p <= 1000에서 [a]_p는 a ± p와 같고 [-a]_p = [p - [a]_p]_p다."""
        for p in range(1, 1001):
            for a in (-2 * p - 1, -p, -1, 0, 1, p - 1, p, 3 * p + 2):
                r = mod_rep(a, p)
                assert 0 <= r < p
                assert r == mod_rep(a + p, p) == mod_rep(a - p, p)
                assert mod_rep(-a, p) == mod_rep(p - r, p)
                assert r + mod_rep(-a, p) in (0, p)

    def test_invalid_modulus(self) -> None:
        """p < 1이면 ValueError를 발생시킨다."""
        with pytest.raises(ValueError, match="법 p"):
            mod_rep(3, 0)


class TestModInv:
    """xgcd / mod_inv 함수 테스트."""

    def test_xgcd_bezout(self) -> None:
        """a*x + b*y = gcd(a, b)를 만족한다."""
        g, x, y = xgcd(3, 7)
        assert g == 1
        assert 3 * x + 7 * y == 1

    @pytest.mark.parametrize(("a", "p", "expected"), [(3, 7, 5), (2, 5, 3), (-1, 9, 8)])
    def test_inverse(self, a: int, p: int, expected: int) -> None:
        """역원을 [0, p)에서 반환한다."""
        assert mod_inv(a, p) == expected

    def test_inverse_property_exhaustive(self) -> None:
        """p <= 1000의 모든 단원에서 a * a' ≡ 1이다."""
        for p in range(2, 1001):
            for a in units(p):
                assert (a * mod_inv(a, p)) % p == 1

    def test_non_unit_rejected(self) -> None:
        """서로소가 아니면 ValueError를 발생시킨다."""
        with pytest.raises(ValueError, match="역원이 없습니다"):
            mod_inv(2, 4)


class TestUnitsAndPrimes:
    """units / is_prime / odd_primes_upto 테스트."""

    def test_units(self) -> None:
        """gcd(u, p) = 1인 u만 반환한다."""
        assert units(12) == [1, 5, 7, 11]
        assert units(7) == [1, 2, 3, 4, 5, 6]

    def test_is_prime(self) -> None:
        """작은 수의 소수 판정이 정확하다."""
        assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]

    def test_odd_primes(self) -> None:
        """2를 제외한 소수만 반환한다."""
        assert odd_primes_upto(13) == [3, 5, 7, 11, 13]


class TestLegendre:
    """르장드르 기호 테스트."""

    def test_known_values(self) -> None:
        """법 7의 잉여는 1, 2, 4다."""
        assert [legendre(m, 7) for m in range(7)] == [0, 1, 1, -1, 1, -1, -1]

    def test_negative_argument(self) -> None:
        """음수 인자도 [m]_p 기준으로 계산한다."""
        assert legendre(-1, 5) == 1
        assert legendre(-1, 7) == -1

    def test_two_independent_routes_agree(self) -> None:
        """오일러 판정법과 제곱 나열 결과가 같다."""
        for p in odd_primes_upto(60):
            for m in range(-p, 2 * p):
                assert legendre(m, p) == legendre_by_squares(m, p)

    def test_multiplicative(self) -> None:
        """(ab/p) = (a/p)(b/p)이다."""
        for p in odd_primes_upto(61):
            for a in range(p):
                for b in range(p):
                    assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)
        for p in odd_primes_upto(500):
            for a in range(p):
                for b in (2, 3, p - 1):
                    assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)

    def test_half_of_units_are_residues(self) -> None:
        """p <= 500의 홀수 소수마다 잉여와 비잉여가 각각 (p-1)/2개다."""
        for p in odd_primes_upto(500):
            symbols = [legendre(a, p) for a in range(1, p)]
            assert symbols.count(1) == (p - 1) // 2
            assert symbols.count(-1) == (p - 1) // 2

    @pytest.mark.parametrize("p", [2, 9, 1])
    def test_rejects_non_odd_prime(self, p: int) -> None:
        """홀수 소수가 아니면 ValueError를 발생시킨다."""
        with pytest.raises(ValueError, match="홀수 소수"):
            legendre(1, p)


class TestBracketSum:
    """bracket_sum_case / bracket_sum 테스트."""

    def test_cases(self) -> None:
        """[X] < p - [Y]이면 no-wrap, 아니면 wrap이다."""
        assert bracket_sum_case(1, 2, 5) == "no-wrap"
        assert bracket_sum_case(3, 2, 5) == "wrap"
        assert bracket_sum_case(3, 4, 5) == "wrap"
        assert bracket_sum_case(-1, 0, 5) == "no-wrap"

    def test_reconstructs_sum_exhaustively(self) -> None:
        """분기 공식이 모든 X, Y에서 [X+Y]_p를 재구성한다."""
        for p in range(1, 13):
            for x in range(-p, 2 * p):
                for y in range(-p, 2 * p):
                    assert bracket_sum(x, y, p) == (x + y) % p


class TestRationalFormat:
    """유리수 직렬화 테스트."""

    @pytest.mark.parametrize(
        ("value", "text"),
        [(Fraction(-1, 2), "-1/2"), (Fraction(1, 6), "1/6"), (Fraction(0), "0/1"), (Fraction(3), "3/1")],
    )
    def test_format(self, value: Fraction, text: str) -> None:
        """정수도 분모를 붙여 num/den으로 쓴다."""
        assert format_rational(value) == text

    def test_parse(self) -> None:
        """num/den과 정수 문자열을 모두 읽는다."""
        assert parse_rational("-9/14") == Fraction(-9, 14)
        assert parse_rational(" 2 ") == Fraction(2)

    def test_random_rationals_survive_text_form(self) -> None:
        """임의의 유리수 산술과 문자열 변환이 정확하다."""
        rng = random.Random(20240501)
        for _ in range(500):
            value = Fraction(rng.randint(-10**12, 10**12), rng.randint(1, 10**9))
            other = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
            assert (value + other) - other == value
            text = format_rational(value)
            assert parse_rational(text) == value
            assert text.count("/") == 1

    def test_parse_invalid(self) -> None:
        """해석할 수 없는 문자열은 ValueError를 발생시킨다."""
        with pytest.raises(ValueError):
            parse_rational("abc")
