"""
配置加载测试

测试 config.ini 读取、环境变量优先级、默认值与非法取值。
"""

import pytest

from config.config_loader import ConfigLoader
from config.constants import DEFAULT_MAX_R, DEFAULT_SEED
from exceptions.base import ConfigurationException


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """清除可能影响测试的 SPLINE_VERIFY_* 环境变量"""
    for env_name in ConfigLoader.ENV_MAPPING.values():
        monkeypatch.delenv(env_name, raising=False)


def write_ini(tmp_path, text: str) -> str:
    path = tmp_path / "config.ini"
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestConfigLoader:
    """测试配置加载器"""

    def test_defaults_without_file(self, tmp_path):
        """测试配置文件不存在时使用默认值"""
        loader = ConfigLoader(str(tmp_path / "missing.ini"), load_env_file=False)
        config = loader.get_all_config()
        assert config["run"] == {"seed": DEFAULT_SEED, "format": "tsv", "workers": 1}
        assert config["guards"]["max_r"] == DEFAULT_MAX_R
        assert config["logging"]["file_logging"] is False
        assert config["search"]["lu_question_search"] is False

    def test_shipped_config(self):
        """测试仓库自带的 config.ini"""
        loader = ConfigLoader(load_env_file=False)
        assert loader.get_config("run")["format"] == "tsv"
        assert loader.get_config("search")["lu_question_trials"] == 200

    def test_ini_values(self, tmp_path):
        """测试读取 ini 中的值"""
        path = write_ini(
            tmp_path,
            "[run]\nseed = 7\nformat = JSON\nworkers = 3\n[guards]\nmax_r = 9\n"
            "[search]\nlu_question_search = yes\n",
        )
        loader = ConfigLoader(path, load_env_file=False)
        assert loader.get_run_config() == {"seed": 7, "format": "json", "workers": 3}
        assert loader.get_guards_config() == {"max_r": 9}
        assert loader.get_search_config()["lu_question_search"] is True

    def test_env_overrides_ini(self, tmp_path, monkeypatch):
        """测试环境变量优先于 ini"""
        path = write_ini(tmp_path, "[run]\nseed = 7\n[guards]\nmax_r = 9\n")
        monkeypatch.setenv("SPLINE_VERIFY_SEED", "11")
        monkeypatch.setenv("SPLINE_VERIFY_MAX_R", "2")
        loader = ConfigLoader(path, load_env_file=False)
        assert loader.get_run_config()["seed"] == 11
        assert loader.get_guards_config()["max_r"] == 2

    def test_bad_integer(self, tmp_path):
        """测试非整数取值"""
        path = write_ini(tmp_path, "[run]\nseed = abc\n")
        loader = ConfigLoader(path, load_env_file=False)
        with pytest.raises(ConfigurationException) as exc_info:
            loader.get_run_config()
        assert exc_info.value.context["config_key"] == "seed"

    def test_below_minimum(self, tmp_path):
        """测试低于下限的取值"""
        path = write_ini(tmp_path, "[run]\nworkers = 0\n")
        with pytest.raises(ConfigurationException):
            ConfigLoader(path, load_env_file=False).get_run_config()

    def test_bad_format(self, tmp_path):
        """测试未知报告格式"""
        path = write_ini(tmp_path, "[run]\nformat = xml\n")
        with pytest.raises(ConfigurationException):
            ConfigLoader(path, load_env_file=False).get_run_config()

    def test_bad_bool(self, tmp_path):
        """测试非布尔取值"""
        path = write_ini(tmp_path, "[logging]\nfile_logging = maybe\n")
        with pytest.raises(ConfigurationException):
            ConfigLoader(path, load_env_file=False).get_logging_config()

    def test_unknown_section(self, tmp_path):
        """测试未知配置节"""
        loader = ConfigLoader(str(tmp_path / "missing.ini"), load_env_file=False)
        with pytest.raises(ConfigurationException):
            loader.get_config("browser")

    def test_malformed_file(self, tmp_path):
        """测试 ini 语法错误"""
        path = write_ini(tmp_path, "seed = 1\n")
        with pytest.raises(ConfigurationException):
            ConfigLoader(path, load_env_file=False)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
