"""
命令行测试

通过 main() 的依赖注入参数运行各命令，检查退出码与报告内容。
"""

import io
import json

import pytest

from cli import build_parser, exit_code_for, main
from exceptions.algebra import InconsistentSystemError
from exceptions.base import ConfigurationException
from exceptions.data import TriangulationParseError
from exceptions.verification import InternalConsistencyError, SizeGuardError, VerificationFailedError
from tests.test_dependency_injection import MockConfigLoader, MockLogger


def run_cli(argv, **loader_options):
    """运行命令，返回 (退出码, stdout 文本, 日志器)"""
    stdout = io.StringIO()
    logger = MockLogger()
    code = main(argv, config_loader=MockConfigLoader(**loader_options), logger=logger, stdout=stdout)
    return code, stdout.getvalue(), logger


def data_rows(report: str):
    return [line.split("\t") for line in report.splitlines()[1:]]


class TestSplineCommands:
    """测试 spline 命令组"""

    def test_dim_delta_s(self):
        """测试 spline dim --tri deltaS --r 1 --d 3 输出 23"""
        code, report, _ = run_cli(["spline", "dim", "--tri", "deltaS", "--r", "1", "--d", "3"])
        assert code == 0
        rows = {row[1]: row for row in data_rows(report)}
        assert rows["spline.dim"][5] == "23"
        assert rows["spline.exactness"][7] == "true"

    def test_dim_file(self, tmp_path):
        """测试读取三角剖分文件"""
        path = tmp_path / "square.yaml"
        path.write_text(
            "vertices: [[0, 0], [1, 0], [1, 1], [0, 1]]\ntriangles: [[0, 1, 2], [0, 2, 3]]\n",
            encoding="utf-8",
        )
        code, report, _ = run_cli(["spline", "dim", "--tri", str(path), "--r", "0", "--d", "1"])
        assert code == 0
        assert {row[1]: row[5] for row in data_rows(report)}["spline.dim"] == "4"

    def test_malformed_file(self, tmp_path):
        """测试格式错误的文件：退出码 2，日志带位置"""
        path = tmp_path / "broken.yaml"
        path.write_text("vertices: [\n", encoding="utf-8")
        code, report, logger = run_cli(["spline", "dim", "--tri", str(path), "--r", "1", "--d", "2"])
        assert code == 2
        assert report == ""
        assert any(level == "ERROR" and "行" in message for level, message in logger.logs)

    def test_missing_file(self, tmp_path):
        """测试文件不存在"""
        code, _, _ = run_cli(
            ["spline", "dim", "--tri", str(tmp_path / "none.yaml"), "--r", "1", "--d", "2"]
        )
        assert code == 2

    def test_check_r1(self):
        """测试 spline check 在 Δ_S 上 r=1"""
        code, report, _ = run_cli(["spline", "check", "--tri", "deltaS", "--r-max", "1"])
        assert code == 0
        claim_ids = [row[1] for row in data_rows(report)]
        assert "spline.sharpness" in claim_ids
        assert "spline.decomposition" in claim_ids
        assert "spline.sigma" in claim_ids


class TestDeltaStarCommands:
    """测试 deltastar 命令组"""

    def test_k_dim_json(self):
        """测试 JSON 报告"""
        code, report, _ = run_cli(["--format", "json", "deltastar", "k-dim", "--r", "2"])
        assert code == 0
        document = json.loads(report)
        assert document["schema_version"] == 1
        assert document["command"] == "deltastar k-dim"
        assert all(row["passed"] for row in document["rows"])

    def test_format_from_config(self):
        """测试未指定 --format 时使用配置"""
        code, report, _ = run_cli(["deltastar", "k-dim", "--r", "1"], report_format="json")
        assert code == 0
        assert json.loads(report)["schema_version"] == 1

    def test_size_guard(self):
        """测试超过 max_r 时退出码 3"""
        code, report, _ = run_cli(["deltastar", "k-dim", "--r", "3"], max_r=2)
        assert code == 3
        assert report == ""

    def test_force(self):
        """测试 --force 跳过规模保护"""
        code, _, logger = run_cli(["--force", "deltastar", "k-dim", "--r", "3"], max_r=2)
        assert code == 0
        assert "WARNING" in logger.levels()

    def test_epsilon(self):
        """测试 deltastar epsilon"""
        code, report, _ = run_cli(["deltastar", "epsilon", "--r", "2"])
        assert code == 0
        assert {row[1]: row[5] for row in data_rows(report)}["k.epsilon"] == "2"

    def test_tri_emit(self):
        """测试输出内置 Δ_S 文档"""
        code, report, _ = run_cli(["deltastar", "tri", "--emit"])
        assert code == 0
        assert report.startswith("name: delta_s")
        assert "triangles:" in report


class TestStructmatCommands:
    """测试 structmat 命令组"""

    def test_schur(self):
        """测试 structmat schur --lambda 2,1 --t 3"""
        code, report, _ = run_cli(["structmat", "schur", "--lambda", "2,1", "--t", "3"])
        assert code == 0
        rows = {row[1]: row for row in data_rows(report)}
        assert rows["schur.det_vs_weyl"][5] == "8"
        assert rows["schur.hook"][6] == "8"

    def test_schur_bad_partition(self):
        """测试非法分拆退出码 2"""
        code, _, _ = run_cli(["structmat", "schur", "--lambda", "1,2", "--t", "3"])
        assert code == 2

    def test_roth(self, tmp_path):
        """测试 structmat roth"""
        w, c = tmp_path / "w.txt", tmp_path / "c.txt"
        w.write_text("1,0;1,1\n", encoding="utf-8")
        c.write_text("0,0;1,0\n", encoding="utf-8")
        code, report, _ = run_cli(["structmat", "roth", "--w", str(w), "--c", str(c)])
        assert code == 0
        rows = {row[1]: row for row in data_rows(report)}
        assert rows["roth.x"][5] == "0,0;0,-1"
        assert rows["roth.y"][5] == "0,-1;0,0"

    def test_roth_lower_not_symmetric(self, tmp_path):
        """测试下三角模式要求对称 W"""
        w, c = tmp_path / "w.txt", tmp_path / "c.txt"
        w.write_text("1,0;1,1", encoding="utf-8")
        c.write_text("0,0;1,0", encoding="utf-8")
        code, _, _ = run_cli(["structmat", "roth", "--w", str(w), "--c", str(c), "--mode", "lower"])
        assert code == 2

    def test_positivity(self):
        """测试 structmat positivity 含 𝒥𝒩、𝒥𝒟 对称性行"""
        code, report, _ = run_cli(["structmat", "positivity", "--r", "4", "--max-order", "3"])
        assert code == 0
        rows = {row[1]: row for row in data_rows(report)}
        assert rows["positivity.jn_symmetric"][-1] == "true"
        assert rows["positivity.jd_symmetric"][-1] == "true"

    def test_kdim(self):
        """测试 structmat kdim"""
        code, report, _ = run_cli(["structmat", "kdim", "--r", "2"])
        assert code == 0
        assert "structmat.roth_operator" in report

    def test_kdim_random_roth(self):
        """测试 structmat kdim 的随机 Roth 行（上三角解与下三角解）"""
        code, report, _ = run_cli(["structmat", "kdim", "--r", "4"])
        assert code == 0
        rows = {row[1]: row for row in data_rows(report)}
        assert rows["structmat.roth_random"][-1] == "true"

    def test_derivative_image_row(self):
        """测试 deltastar verify 记录 r=3 的导数像维数且不超过 2"""
        code, report, _ = run_cli(["deltastar", "verify", "--r-max", "3"])
        assert code == 0
        row = [row for row in data_rows(report) if row[1] == "k.derivative_image" and row[3] == "3"][0]
        assert int(row[5]) <= 2
        assert row[6] == "<=2"
        assert row[-1] == "true"

    def test_lu_search_disabled(self):
        """测试 LU 搜索默认关闭"""
        code, _, _ = run_cli(["structmat", "lu-search", "--size", "3"])
        assert code == 2

    def test_lu_search_enabled(self):
        """测试 --enable-lu-search"""
        code, report, _ = run_cli(
            ["structmat", "lu-search", "--size", "3", "--trials", "10", "--enable-lu-search"]
        )
        assert code == 0
        assert "lu_search.tested" in report


class TestVerify:
    """测试 verify 全集"""

    def test_verify_r1(self):
        """测试 verify --r-max 1 全部通过"""
        code, report, _ = run_cli(["verify", "--r-max", "1"])
        assert code == 0
        rows = data_rows(report)
        assert all(row[7] == "true" for row in rows)
        assert {"k.dim", "spline.conjecture", "structmat.params"} <= {row[1] for row in rows}

    def test_report_is_deterministic(self):
        """测试相同输入两次运行报告一致"""
        first = run_cli(["deltastar", "k-dim", "--r", "3"])[1]
        second = run_cli(["deltastar", "k-dim", "--r", "3"])[1]
        assert first == second


class TestParserAndExitCodes:
    """测试参数解析与退出码映射"""

    def test_rejects_non_positive_r(self):
        """测试 --r 0 被 argparse 拒绝"""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["deltastar", "k-dim", "--r", "0"])

    def test_requires_subcommand(self):
        """测试缺少子命令"""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["spline"])

    def test_exit_codes(self):
        """测试异常 → 退出码"""
        assert exit_code_for(SizeGuardError(9, 6)) == 3
        assert exit_code_for(InternalConsistencyError("x")) == 4
        assert exit_code_for(InconsistentSystemError("solve", (2, 2))) == 4
        assert exit_code_for(TriangulationParseError("f", "bad")) == 2
        assert exit_code_for(ConfigurationException("bad")) == 2
        assert exit_code_for(OSError("missing")) == 2
        assert exit_code_for(VerificationFailedError("k.dim", 1, 2)) == 1


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
