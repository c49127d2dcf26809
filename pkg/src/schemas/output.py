"""명령행 출력 레코드 데이터 타입 정의 모듈.

모든 명령이 공통으로 내보내는 최상위 레코드와 d 표의 행을
Pydantic 모델로 관리한다. 유리수는 항상 "num/den" 문자열로 담는다.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field

OutputFormat = Literal["json", "csv", "plain"]


class OutputRecord(BaseModel):
    """명령 하나의 출력 레코드.

    같은 입력이면 바이트 단위로 같은 출력이 나와야 하므로
    시각이나 실행 환경 정보는 담지 않는다.

    Attributes:
        command: 실행한 명령 이름.
        params: 명령 인자.
        payload: 결과 (JSON 호환 값만).
        version: 출력 형식 버전.
    """

    command: str = Field(description="실행한 명령 이름 (dtable, classify, sbar, verify, classes)")
    params: dict[str, Any] = Field(description="명령 인자")
    payload: Any = Field(description="결과 본문 (JSON 호환 값)")
    version: str = Field(description="출력 형식 버전")


class DTableRow(BaseModel):
    """d 표의 한 행.

    Attributes:
        label: spin-c 라벨.
        d: 정확한 d 값 ("num/den").
        d_approx: 소수 6자리 근삿값 (사람이 읽기 위한 값, 비교에 쓰지 않는다).
        spin: spin 구조 여부.
    """

    label: int = Field(description="spin-c 라벨 i")
    d: str = Field(description="정확한 d 값 (num/den)")
    d_approx: str = Field(description="소수 6자리 근삿값 (참고용)")
    spin: bool = Field(description="spin 구조 여부")
