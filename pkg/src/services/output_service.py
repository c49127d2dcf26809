"""명령 결과를 json / csv / plain 텍스트로 렌더링하는 서비스 모듈.

모든 명령 결과는 OutputRecord로 감싼 뒤 렌더링한다.
같은 레코드는 항상 같은 문자열이 된다.
"""

import csv
import io
import json
import logging
from typing import Any

from pydantic_core import to_jsonable_python

from src.schemas.lens import DInvTable, SpinSet
from src.schemas.output import DTableRow, OutputFormat, OutputRecord
from src.tools.modarith import format_rational

logger = logging.getLogger(__name__)

# 근삿값 소수 자릿수 (사람이 읽기 위한 값)
_APPROX_DIGITS = 6


class OutputService:
    """출력 레코드 생성 및 렌더링 서비스.

    Attributes:
        _version: 레코드에 담을 출력 형식 버전.
    """

    def __init__(self, version: str) -> None:
        self._version = version

    def build_record(
        self, command: str, params: dict[str, Any], payload: Any
    ) -> OutputRecord:
        """결과 객체를 JSON 호환 값으로 바꿔 레코드로 감싼다.

        Args:
            command: 명령 이름.
            params: 명령 인자.
            payload: Pydantic 모델, 리스트, 딕셔너리 등 결과 본문.

        Returns:
            OutputRecord: 렌더링할 레코드.
        """
        return OutputRecord(
            command=command,
            params=params,
            payload=to_jsonable_python(payload),
            version=self._version,
        )

    def dtable_payload(self, table: DInvTable, spin: SpinSet) -> dict[str, Any]:
        """d 표를 행 목록이 포함된 본문으로 만든다."""
        rows = [
            DTableRow(
                label=label,
                d=format_rational(value),
                d_approx=format(float(value), f".{_APPROX_DIGITS}f"),
                spin=label in spin,
            )
            for label, value in enumerate(table.values)
        ]
        return {
            "space": table.space.name,
            "orientation": table.orientation,
            "spin_structures": list(spin.labels),
            "rows": [row.model_dump() for row in rows],
        }

    def render(self, record: OutputRecord, fmt: OutputFormat) -> str:
        """레코드를 지정한 형식의 문자열로 렌더링한다 (끝 줄바꿈 없음).

        Args:
            record: 렌더링할 레코드.
            fmt: json, csv, plain 중 하나.

        Returns:
            렌더링된 문자열.

        Raises:
            ValueError: 지원하지 않는 형식인 경우.
        """
        if fmt == "json":
            return record.model_dump_json(indent=2)
        if fmt == "csv":
            return self._render_csv(self._rows(record))
        if fmt == "plain":
            return self._render_plain(record, self._rows(record))
        raise ValueError(f"지원하지 않는 출력 형식입니다: {fmt}")

    # --- Private methods ---

    def _rows(self, record: OutputRecord) -> list[dict[str, Any]]:
        """본문을 표 형태의 행 목록으로 펼친다.

        본문에 rows가 있으면 그대로 쓰고, 없으면 키/값 행으로 펼친다.
        """
        payload = record.payload
        if isinstance(payload, dict) and "rows" in payload:
            return payload["rows"]
        if isinstance(payload, dict):
            return [{"key": k, "value": self._cell(v)} for k, v in payload.items()]
        if isinstance(payload, list):
            return [{"index": i, "value": self._cell(v)} for i, v in enumerate(payload)]
        return [{"key": "value", "value": self._cell(payload)}]

    def _cell(self, value: Any) -> Any:
        """스칼라는 그대로, 중첩 값은 압축 JSON 문자열로 바꾼다."""
        if isinstance(value, (dict, list)):
            return json.dumps(value, ensure_ascii=False, separators=(",", ":"))
        return value

    def _render_csv(self, rows: list[dict[str, Any]]) -> str:
        if not rows:
            return ""
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")

    def _render_plain(
        self, record: OutputRecord, rows: list[dict[str, Any]]
    ) -> str:
        params = " ".join(f"{k}={v}" for k, v in record.params.items())
        lines = [f"# {record.command} {params} (version {record.version})"]
        if rows:
            lines.append("  ".join(str(column) for column in rows[0]))
            lines.extend("  ".join(str(v) for v in row.values()) for row in rows)
        return "\n".join(lines)


if __name__ == "__main__":
    """L(3,1) 표를 세 형식으로 출력한다."""
    from src.schemas.lens import LensSpace
    from src.services.dinvariant_service import DInvariantService

    logging.basicConfig(level=logging.INFO)

    d_service = DInvariantService()
    space = LensSpace(p=3, q=1)
    service = OutputService(version="1.0")
    record = service.build_record(
        "dtable",
        {"p": 3, "q": 1},
        service.dtable_payload(d_service.d_table(space), d_service.spin_structures(space)),
    )
    for fmt in ("json", "csv", "plain"):
        print(f"=== {fmt} ===")
        print(service.render(record, fmt))
