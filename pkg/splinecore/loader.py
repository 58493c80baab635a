"""
三角剖分文档读写

文档为 YAML（JSON 亦可，作为 YAML 的子集）：

    name: delta_s
    vertices:
      - ["0", "0"]
      - ["1/2", "3"]
    triangles:
      - [0, 1, 2]

顶点坐标写作有理数字符串或整数；三角形为顶点下标三元组。
"""

from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import yaml

from exceptions.data import TriangulationParseError

from .triangulation import Triangulation


def _locate(node: Optional[yaml.Node], *path) -> Tuple[Optional[int], Optional[int]]:
    """沿 (键 / 下标) 路径查找 YAML 节点位置，返回从 1 开始的 (行, 列)"""
    current = node
    for step in path:
        if isinstance(current, yaml.MappingNode):
            current = next((v for k, v in current.value if k.value == step), current)
        elif isinstance(current, yaml.SequenceNode) and isinstance(step, int):
            if step >= len(current.value):
                break
            current = current.value[step]
        else:
            break
    if current is None:
        return None, None
    return current.start_mark.line + 1, current.start_mark.column + 1


def _rational(value: Any) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"坐标必须是整数或有理数字符串，得到 {value!r}")
    text = str(value).strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"不接受小数坐标 {value!r}")
    return Fraction(text)


def load_triangulation(
    doc: Dict[str, Any], source: str = "<document>", root: Optional[yaml.Node] = None
) -> Triangulation:
    """
    由已解析的文档构造并校验三角剖分

    Args:
        doc: 文档字典
        source: 来源描述，用于错误信息
        root: YAML 节点树（可选），用于给出出错位置

    Raises:
        TriangulationParseError: 结构错误
        NotADiskError / DegenerateTriangleError / DanglingEdgeError: 几何校验失败
    """
    if not isinstance(doc, dict):
        raise TriangulationParseError(source, "顶层必须是映射", *_locate(root))
    for key in ("vertices", "triangles"):
        if not isinstance(doc.get(key), list):
            raise TriangulationParseError(source, f"缺少列表字段 '{key}'", *_locate(root, key))

    vertices = []
    for i, entry in enumerate(doc["vertices"]):
        if not isinstance(entry, list) or len(entry) != 2:
            raise TriangulationParseError(
                source, f"第 {i} 个顶点必须是坐标对", *_locate(root, "vertices", i)
            )
        try:
            vertices.append((_rational(entry[0]), _rational(entry[1])))
        except (ValueError, ZeroDivisionError) as e:
            raise TriangulationParseError(source, str(e), *_locate(root, "vertices", i))

    triangles = []
    for i, entry in enumerate(doc["triangles"]):
        if (
            not isinstance(entry, list)
            or len(entry) != 3
            or not all(isinstance(k, int) and not isinstance(k, bool) for k in entry)
        ):
            raise TriangulationParseError(
                source, f"第 {i} 个三角形必须是三个整数下标", *_locate(root, "triangles", i)
            )
        triangles.append(tuple(entry))

    return Triangulation.build(vertices, triangles, name=str(doc.get("name", "")))


def parse_triangulation_text(text: str, source: str = "<string>") -> Triangulation:
    """解析 YAML/JSON 文本"""
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
        doc = yaml.safe_load(text)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark
        raise TriangulationParseError(
            source,
            e.problem or "YAML 语法错误",
            mark.line + 1 if mark else None,
            mark.column + 1 if mark else None,
        )
    except yaml.YAMLError as e:
        raise TriangulationParseError(source, str(e))
    return load_triangulation(doc, source, root)


def load_triangulation_file(path: Union[str, Path]) -> Triangulation:
    """
    读取三角剖分文件

    Raises:
        OSError: 文件无法读取
        TriangulationParseError: 文档格式错误
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_triangulation_text(text, str(path))


def triangulation_document(triangulation: Triangulation) -> Dict[str, Any]:
    """三角剖分 → 文档字典（坐标写作有理数字符串）"""
    return {
        "name": triangulation.name,
        "vertices": [[str(x), str(y)] for x, y in triangulation.vertices],
        "triangles": [list(t) for t in triangulation.triangles],
    }


def dump_triangulation(triangulation: Triangulation) -> str:
    """三角剖分 → YAML 文本（流式列表，键序固定）"""
    return yaml.safe_dump(
        triangulation_document(triangulation),
        sort_keys=False,
        default_flow_style=None,
        allow_unicode=True,
    )
