#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
森林 Hopf 代数 - 系统级验收测试
通过 ForestHopfSystem 运行全部验证套件
"""

import sys

import pytest

from src.core import Config, ForestHopfSystem


@pytest.fixture
def system(tmp_path):
    config_file = tmp_path / "config.json"
    config_file.write_text("{}")
    return ForestHopfSystem(config=Config(str(config_file), use_env=False))


def assert_passes(results):
    for result in results:
        assert result.passed, str(result.counterexample)


def test_module_import():
    """测试模块导入"""
    from src.core import (  # noqa: F401
        SuiteRunner, UniversalMorphism, antipode, delta_eps, enumerate_forests, parse_forest,
    )


def test_system_initialization(system):
    """测试系统初始化与状态"""
    status = system.get_status()
    assert status["enumeration"]["alphabet"] == ["x", "y"]
    assert status["enumeration"]["counts"] == [1, 3, 12, 57, 300, 1686]
    assert status["suites"]["mutated"] is False
    assert set(status["caches"]) >= {"coproducts", "antipode"}


def test_clear_caches(system):
    """一次调用清空全部记忆表"""
    from src.core import antipode, antipode_recursive, delta_foissy, delta_rt, parse_forest, phi_bar, serialize

    F = parse_forest("@[x @]")
    before = serialize(antipode(F))
    antipode_recursive(F)
    delta_rt(F)
    delta_foissy(parse_forest("@[@]"))
    phi_bar(F)
    caches = system.get_status()["caches"]
    assert caches["antipode"] and caches["d_eps"] and caches["morphism"]
    assert caches["coproducts"]["eps"] and caches["coproducts"]["rt"]

    system.clear_caches()
    caches = system.get_status()["caches"]
    assert caches["coproducts"] == {"eps": 0, "comb": 0, "foissy": 0, "rt": 0}
    assert (caches["d_eps"], caches["antipode"], caches["antipode_recursive"], caches["morphism"]) == (0, 0, 0, 0)
    assert serialize(antipode(F)) == before


@pytest.mark.parametrize("suite", ["coassoc", "equiv", "termcount", "grading", "leibniz"])
def test_exhaustive_six_vertices(system, suite):
    """≤ 6 个顶点、字母表 {x, y} 上的穷举验证"""
    [result] = system.run_suite(suite, 6, ["x", "y"])
    assert result.passed, str(result.counterexample)
    if suite != "leibniz":
        assert result.checked == sum([1, 3, 12, 57, 300, 1686, 9912])


@pytest.mark.parametrize("suite", [
    "cocycle", "breadth", "derivation", "nilpotency", "antipode", "morphism", "foissy", "kx", "sampled",
])
def test_five_vertices(system, suite):
    """≤ 5 个顶点上的其余套件"""
    assert_passes(system.run_suite(suite, 5, ["x", "y"]))


def test_undecorated_basis(system):
    """X = ∅ 时套件在未装饰基上通过"""
    results = system.run_suite("all", 5, [])
    assert [r.suite for r in results][:4] == ["coassoc", "leibniz", "cocycle", "equiv"]
    assert_passes(results)


def test_mutation_is_caught(tmp_path):
    """损坏的 Δε 必须被套件检出"""
    config_file = tmp_path / "config.json"
    config_file.write_text("{}")
    system = ForestHopfSystem(config=Config(str(config_file), use_env=False), mutate=True)
    [result] = system.run_suite("equiv", 3, ["x"])
    assert not result.passed
    assert result.counterexample.subject == "@"
    assert system.get_status()["suites"]["failed"] == 1


def test_parallel_workers_agree(system):
    """多线程分片与单线程给出同样的最小反例"""
    system.config.set("verification.workers", 4)
    assert system.runner.workers == 4
    [result] = system.run_suite("coassoc", 4, ["x"])
    assert result.passed

    mutated = ForestHopfSystem(config=system.config, mutate=True)
    [parallel] = mutated.run_suite("equiv", 4, ["x", "y"])
    assert parallel.counterexample.subject == "@"


if __name__ == "__main__":
    print("森林 Hopf 代数 - 验收测试")
    print("=" * 40)
    sys.exit(pytest.main([__file__, "-v"]))
