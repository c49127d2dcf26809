"""렌즈 공간 d-invariant 도구의 명령행 인터페이스 모듈.

라우팅(명령 등록과 인자 해석)만 담당하며, 계산은 모두 서비스에 위임한다.
결과는 stdout, 진단 메시지는 stderr로 나간다.
종료 코드: 0 성공, 1 반례 발견, 2 잘못된 입력.
"""

import logging
from collections.abc import Callable
from enum import Enum
from typing import Any, Optional

import typer
from dotenv import load_dotenv

from src.config.settings import LensSettings, SweepCaps
from src.schemas.lens import LensSpace
from src.schemas.report import SweepReport
from src.services.classify_service import ClassifyService
from src.services.dinvariant_service import DInvariantService
from src.services.lemma_service import LemmaService
from src.services.output_service import OutputService
from src.services.relative_service import RelativeService
from src.services.residue_service import ResidueService

logger = logging.getLogger(__name__)

# 반례가 발견된 검증 스윕의 종료 코드
EXIT_COUNTEREXAMPLE = 1
# 잘못된 매개변수의 종료 코드 (click 사용법 오류와 같은 값)
EXIT_USAGE = 2


class Format(str, Enum):
    json = "json"
    csv = "csv"
    plain = "plain"


class Orientation(str, Enum):
    standard = "standard"
    reversed = "reversed"


class Toggle(str, Enum):
    true = "true"
    false = "false"


class Profile(str, Enum):
    quick = "quick"
    full = "full"


class Suite(str, Enum):
    shift = "shift"
    lemma3 = "lemma3"
    theorem1 = "theorem1"
    theorem2 = "theorem2"
    lemma4 = "lemma4"
    lemma5 = "lemma5"
    key_identity = "key_identity"
    all = "all"


app = typer.Typer(
    help="렌즈 공간 d-invariant 표, 분류 판정, 유한 검증 스윕.",
    no_args_is_help=True,
    add_completion=False,
)


class _Context:
    """명령 하나가 공유하는 설정과 서비스 묶음."""

    def __init__(self, settings: LensSettings) -> None:
        self.settings = settings
        self.d_service = DInvariantService()
        self.relative_service = RelativeService(self.d_service)
        self.classify_service = ClassifyService(self.d_service, self.relative_service)
        self.residue_service = ResidueService(self.d_service, self.relative_service)
        self.lemma_service = LemmaService()
        self.output_service = OutputService(settings.output_version)

    def suite_runners(self) -> dict[str, Callable[[int], SweepReport]]:
        """스윕 이름 → p_max를 받아 보고서를 돌려주는 함수."""
        return {
            "shift": self.d_service.verify_shift_suite,
            "lemma3": self.relative_service.verify_lemma3_suite,
            "theorem1": self.classify_service.verify_theorem1,
            "theorem2": self.residue_service.verify_theorem2_and_corollary,
            "lemma4": self.lemma_service.verify_lemma4,
            "lemma5": self.lemma_service.verify_lemma5,
            "key_identity": self.classify_service.verify_key_identity,
        }


def _context() -> _Context:
    load_dotenv()
    settings = LensSettings()
    logging.basicConfig(level=settings.log_level.upper())
    return _Context(settings)


def _emit(
    ctx: _Context,
    command: str,
    params: dict[str, Any],
    payload: Any,
    fmt: Format,
) -> None:
    record = ctx.output_service.build_record(command, params, payload)
    typer.echo(ctx.output_service.render(record, fmt.value))


def _fail_usage(error: ValueError) -> typer.Exit:
    """잘못된 입력을 stderr에 알리고 종료 코드 2를 돌려준다."""
    logger.error("잘못된 입력: %s", error)
    typer.echo(f"오류: {error}", err=True)
    return typer.Exit(code=EXIT_USAGE)


@app.command()
def dtable(
    p: int = typer.Argument(..., help="H_1의 위수 p"),
    q: int = typer.Argument(..., help="p와 서로소인 q"),
    fmt: Format = typer.Option(Format.json, "--format", help="출력 형식"),
    orientation: Orientation = typer.Option(
        Orientation.standard, "--orientation", help="방향 규약",
    ),
) -> None:
    """라벨별 d-invariant 표를 출력한다."""
    ctx = _context()
    try:
        space = LensSpace(p=p, q=q)
        table = ctx.d_service.d_table(space)
        if orientation == Orientation.reversed:
            table = ctx.d_service.reverse_orientation_table(table)
        spin = ctx.d_service.spin_structures(space)
    except ValueError as e:
        raise _fail_usage(e) from e

    params = {"p": p, "q": q, "orientation": orientation.value}
    _emit(ctx, "dtable", params, ctx.output_service.dtable_payload(table, spin), fmt)


@app.command()
def classify(
    p: int = typer.Argument(..., help="공통 p"),
    q1: int = typer.Argument(..., help="첫 번째 q"),
    q2: int = typer.Argument(..., help="두 번째 q"),
    require_spin_compat: Toggle = typer.Option(
        Toggle.true, "--require-spin-compat", help="spin 호환 조건 적용 여부",
    ),
    fmt: Format = typer.Option(Format.json, "--format", help="출력 형식"),
) -> None:
    """두 렌즈 공간의 위상동형 여부와 d 보존 동형 증인을 출력한다."""
    ctx = _context()
    try:
        verdict = ctx.classify_service.classify(
            p, q1, q2, require_spin_compat=require_spin_compat == Toggle.true,
        )
    except ValueError as e:
        raise _fail_usage(e) from e

    params = {
        "p": p, "q1": q1, "q2": q2,
        "require_spin_compat": require_spin_compat == Toggle.true,
    }
    _emit(ctx, "classify", params, verdict, fmt)


@app.command()
def sbar(
    p: int = typer.Argument(..., help="법 p (합성수면 원시 데이터만 출력)"),
    q: int = typer.Argument(..., help="p와 서로소인 q"),
    fmt: Format = typer.Option(Format.json, "--format", help="출력 형식"),
) -> None:
    """f의 법 p 상 집합과 중복도를 출력한다."""
    ctx = _context()
    try:
        result = ctx.residue_service.sbar(p, q)
    except ValueError as e:
        raise _fail_usage(e) from e

    _emit(ctx, "sbar", {"p": p, "q": q}, result, fmt)


@app.command()
def classes(
    p: int = typer.Argument(..., help="법 p"),
    fmt: Format = typer.Option(Format.json, "--format", help="출력 형식"),
) -> None:
    """법 p의 q들을 위상동형 류로 나눠 출력한다."""
    ctx = _context()
    if p < 2:
        raise _fail_usage(ValueError(f"p는 2 이상이어야 합니다 (p={p})."))

    _emit(ctx, "classes", {"p": p}, ctx.classify_service.homeomorphism_classes(p), fmt)


@app.command()
def verify(
    suite: Suite = typer.Argument(..., help="실행할 검증 스윕"),
    pmax: Optional[int] = typer.Option(
        None, "--pmax", min=2, help="p 상한 (프로필 상한을 덮어쓴다)",
    ),
    profile: Optional[Profile] = typer.Option(
        None, "--profile", help="스윕 상한 프로필 (기본: 설정값)",
    ),
    fmt: Format = typer.Option(Format.json, "--format", help="출력 형식"),
) -> None:
    """유한 검증 스윕을 실행한다. 반례가 있으면 종료 코드 1."""
    ctx = _context()
    caps = ctx.settings.caps_for(profile.value if profile else None)
    runners = ctx.suite_runners()
    names = list(runners) if suite == Suite.all else [suite.value]

    try:
        reports = [runners[name](_cap(caps, name, pmax)) for name in names]
    except ValueError as e:
        raise _fail_usage(e) from e

    params = {
        "suite": suite.value,
        "pmax": pmax,
        "profile": profile.value if profile else ctx.settings.profile,
    }
    payload: Any = reports[0] if suite != Suite.all else {"reports": reports}
    _emit(ctx, "verify", params, payload, fmt)

    failed = [report.suite for report in reports if not report.ok]
    if failed:
        typer.echo(f"반례 발견: {', '.join(failed)}", err=True)
        raise typer.Exit(code=EXIT_COUNTEREXAMPLE)


def _cap(caps: SweepCaps, suite: str, pmax: int | None) -> int:
    return pmax if pmax is not None else caps.for_suite(suite)


if __name__ == "__main__":
    app()
