#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
测试命令行接口
"""

import io
import json

import pytest

from src.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main


@pytest.fixture
def cli(tmp_path):
    """以空配置文件运行命令行，返回 (退出码, 输出)"""
    config_file = tmp_path / "config.json"
    config_file.write_text("{}")

    def run(*argv):
        stream = io.StringIO()
        code = main(["--config", str(config_file), *argv], stream=stream)
        return code, stream.getvalue()

    return run


@pytest.mark.parametrize("argv, expected", [
    (["parse", "@[ x ]"], "@[x]"),
    (["parse", "1"], "1"),
    (["parse", "--kind", "lincomb", "@ + 3/2 * x"], "3/2 * x + @"),
    (["parse", "--kind", "tensor", "1 (x) @ + x (x) 1"], "x (x) 1 + 1 (x) @"),
    (["coprod", "@[x]"], "x (x) 1 + 1 (x) @"),
    (["coprod", "1"], "0"),
    (["coprod", "--method", "foissy", "@[@]"], "@[@] (x) 1 + @ (x) @ + 1 (x) @[@]"),
    (["antipode", "1"], "- 1"),
    (["antipode", "@[x]"], "- @[x] + x + @ - 1"),
    (["antipode", "--recursive", "@[x]"], "- @[x] + x + @ - 1"),
    (["morphism", "@[x]"], "x^2"),
    (["morphism", "1"], "1"),
    (["morphism", "x y"], "x^2"),
    (["enumerate", "--max-vertices", "2", "--alphabet", "x", "--count-only"], "1 2 6"),
    (["enumerate", "--max-vertices", "4", "--alphabet", "", "--count-only"], "1 1 2 5 14"),
    (["enumerate", "--max-vertices", "0", "--count-only"], "1"),
])
def test_commands(cli, argv, expected):
    """测试各子命令的规范输出"""
    code, out = cli(*argv)
    assert code == EXIT_OK
    assert out.strip() == expected


def test_coprod_rt(cli):
    code, out = cli("coprod", "--method", "rt", "@[y @[x]]")
    assert code == EXIT_OK
    assert out.strip() == (
        "@[y @[x]] (x) 1 + y @[x] (x) @ + y x (x) @[@] + @[x] (x) @[y] "
        "+ y (x) @[@[x]] + x (x) @[y @] + 1 (x) @[y @[x]]"
    )


def test_antipode_prints_canonical_order_not_constant_first(cli):
    """S(x) = 1 - x 按规范序（顶点数降序）输出，常数项在最后"""
    code, out = cli("antipode", "x")
    assert code == EXIT_OK
    assert out.strip() == "- x + 1"


def test_enumerate_listing(cli):
    code, out = cli("enumerate", "--max-vertices", "1", "--alphabet", "x")
    assert code == EXIT_OK
    assert out.splitlines() == ["0\t1", "1\t@", "1\tx"]


def test_morphism_check(cli):
    code, out = cli("morphism", "--check", "@[x] - 2 * y")
    assert code == EXIT_OK
    assert out.strip() == "x^2 - 2 * x"


def test_check_passes(cli):
    """测试小规模套件通过"""
    code, out = cli("check", "--suite", "coassoc", "--max-vertices", "3")
    assert code == EXIT_OK
    assert out.startswith("coassoc: PASS")


def test_check_mutation_is_detected(cli):
    """测试损坏的余乘被检出，反例为 @"""
    code, out = cli("check", "--mutate", "--suite", "equiv", "--max-vertices", "2", "--alphabet", "x")
    assert code == EXIT_VIOLATION
    assert "equiv: FAIL" in out
    assert "counterexample for equiv: @" in out


def test_json_output(cli):
    """测试 --json 输出"""
    code, out = cli("--json", "parse", "x")
    assert code == EXIT_OK
    assert json.loads(out) == [{"label": "x", "children": []}]

    code, out = cli("--json", "coprod", "@[x]")
    assert json.loads(out)["terms"][0] == {"coeff": "1/1", "left": [{"label": "x", "children": []}], "right": []}

    code, out = cli("--json", "enumerate", "--max-vertices", "3", "--alphabet", "", "--count-only")
    assert json.loads(out) == [1, 1, 2, 5]

    code, out = cli("--json", "check", "--suite", "grading", "--max-vertices", "2")
    assert code == EXIT_OK
    [result] = json.loads(out)
    assert result["suite"] == "grading" and result["passed"] is True


@pytest.mark.parametrize("argv", [
    ["parse", "x[@]"],
    ["parse", "@[x"],
    ["coprod", "--method", "foissy", "@[x]"],
    ["enumerate", "--max-vertices", "-1"],
    ["enumerate", "--alphabet", "x,@"],
    ["check", "--max-vertices", "-1", "--suite", "equiv"],
    ["frobnicate"],
    ["coprod", "--method", "nope", "@"],
])
def test_usage_errors(cli, argv, capsys):
    """测试格式错误与参数错误的退出码"""
    code, _ = cli(*argv)
    assert code == EXIT_USAGE


def test_format_error_message(cli, capsys):
    cli("parse", "x[@]")
    assert "generator label on internal vertex" in capsys.readouterr().err


def test_status(cli):
    code, out = cli("status")
    assert code == EXIT_OK
    status = json.loads(out)
    assert status["enumeration"]["counts"] == [1, 3, 12, 57, 300, 1686]
    assert status["suites"]["total"] == 0


def _ladder(depth):
    return "@[" * depth + "]" * depth


@pytest.mark.parametrize("argv", [
    ["coprod", _ladder(1000)],
    ["parse", _ladder(5000)],
])
def test_deep_nesting_is_reported(cli, argv, capsys):
    """过深的嵌套按参数错误报告，不抛出 RecursionError"""
    code, out = cli(*argv)
    assert code == EXIT_USAGE
    assert out == ""
    assert "nested too deeply" in capsys.readouterr().err


def test_moderate_nesting_is_computed(cli):
    code, out = cli("coprod", _ladder(50))
    assert code == EXIT_OK
    terms = out.strip().split(" + ")
    assert len(terms) == 50
    assert f"{_ladder(49)} (x) 1" in terms
    assert f"1 (x) {_ladder(49)}" in terms
