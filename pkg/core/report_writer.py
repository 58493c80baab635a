"""
报告输出器

把结论行 (ClaimResult) 渲染为 TSV 或 JSON 报告。
职责：
- 数值统一转为精确字符串（"1/5"，不出现浮点）
- 行按 (r, d, 结论登记顺序) 排序，保证相同输入的报告逐字节一致
- JSON 报告带 schema_version
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from config.constants import CLAIM_COLUMNS, REPORT_FORMATS, REPORT_SCHEMA_VERSION
from exceptions.base import ConfigurationException
from interfaces.interfaces import IReportWriter


def exact_text(value: Any) -> str:
    """精确字符串：Fraction → "p/q"，bool → "true"/"false"，序列逐项以逗号连接"""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else str(value)
    if isinstance(value, (list, tuple)):
        return ",".join(exact_text(v) for v in value)
    if value is None or (isinstance(value, float) and value != value):
        return ""
    return str(value)


@dataclass(frozen=True)
class ClaimResult:
    """
    一条结论的检验结果

    Attributes:
        claim_id: 登记表中的结论编号
        locator: 结论的出处描述
        r: 光滑度（无关时为 None）
        d: 次数（无关时为 None）
        computed: 计算值（精确字符串）
        expected: 期望值（精确字符串）
        passed: 是否通过
    """

    claim_id: str
    locator: str
    r: Optional[int]
    d: Optional[int]
    computed: str
    expected: str
    passed: bool

    @classmethod
    def compare(
        cls,
        claim_id: str,
        locator: str,
        computed: Any,
        expected: Any,
        r: Optional[int] = None,
        d: Optional[int] = None,
        passed: Optional[bool] = None,
    ) -> "ClaimResult":
        """以精确相等（或显式给出的 passed）构造结论行"""
        if passed is None:
            passed = computed == expected
        return cls(claim_id, locator, r, d, exact_text(computed), exact_text(expected), passed)


class ReportWriter(IReportWriter):
    """报告输出器 - 通过 pandas 渲染 TSV / JSON"""

    def __init__(self, report_format: str = "tsv", claim_order: Sequence[str] = ()):
        """
        初始化报告输出器

        Args:
            report_format: "tsv" 或 "json"
            claim_order: 结论登记顺序，用于同一 (r, d) 内的排序
        """
        if report_format not in REPORT_FORMATS:
            raise ConfigurationException(
                f"不支持的报告格式 {report_format!r}", config_section="run", config_key="format"
            )
        self.report_format = report_format
        self._order = {claim_id: index for index, claim_id in enumerate(claim_order)}

    def _sort_key(self, row: ClaimResult):
        return (
            -1 if row.r is None else row.r,
            -1 if row.d is None else row.d,
            self._order.get(row.claim_id, len(self._order)),
            row.claim_id,
        )

    def to_frame(self, command: str, rows: Sequence[ClaimResult]) -> pd.DataFrame:
        """结论行 → DataFrame（列顺序固定为 CLAIM_COLUMNS）"""
        records: List[Dict[str, Any]] = [
            {
                "command": command,
                "claim_id": row.claim_id,
                "locator": row.locator,
                "r": row.r,
                "d": row.d,
                "computed": row.computed,
                "expected": row.expected,
                "passed": row.passed,
            }
            for row in sorted(rows, key=self._sort_key)
        ]
        return pd.DataFrame(records, columns=list(CLAIM_COLUMNS), dtype=object)

    def render(self, command: str, rows: Sequence[ClaimResult]) -> str:
        """
        渲染报告文本

        Args:
            command: 命令名
            rows: 结论行

        Returns:
            str: TSV（含表头）或 JSON 文本，以换行结尾
        """
        frame = self.to_frame(command, rows)
        if self.report_format == "json":
            return self._render_json(command, frame)
        text_frame = frame.apply(lambda column: column.map(exact_text))
        return text_frame.to_csv(sep="\t", index=False, lineterminator="\n")

    def _render_json(self, command: str, frame: pd.DataFrame) -> str:
        records = []
        for record in frame.to_dict(orient="records"):
            records.append(
                {key: _json_value(key, value) for key, value in record.items()}
            )
        document = {
            "schema_version": REPORT_SCHEMA_VERSION,
            "command": command,
            "rows": records,
        }
        return json.dumps(document, sort_keys=True, ensure_ascii=False, indent=2) + "\n"

    @staticmethod
    def all_passed(rows: Sequence[ClaimResult]) -> bool:
        return all(row.passed for row in rows)


def _json_value(key: str, value: Any) -> Any:
    """r、d 保持整数（缺省为 null），passed 为布尔，其余为精确字符串"""
    if key in ("r", "d"):
        return None if exact_text(value) == "" else int(value)
    if key == "passed":
        return bool(value)
    return exact_text(value)
