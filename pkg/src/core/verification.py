#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""代数定律的穷举验证套件

每个套件把一组检查对象（森林、森林对或 k[x] 单项式次数）按规模递增排列，
逐个检查，第一个失败的对象即为最小反例。
"""

import random
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from .config import Config
from .coproduct import (
    Coproduct, delta_eps, delta_eps_breadth_expansion, delta_eps_comb, delta_foissy, graft_right,
)
from .enumerator import enumerate_pairs, enumerate_up_to
from .exceptions import ForestArgumentError
from .forest import UNIT, Forest, bplus, concat
from .freemodule import (
    LinComb, Tensor2, act_left, act_right, expand_left, expand_right, lc_mul, tensor,
)
from .hopf import (
    ANTIPODE, D_EPS, IDENTITY, RECURSIVE_ANTIPODE, ZERO, Endo, antipode, antipode_check,
    antipode_recursive, circ_convolve, compose, convolve, d_eps,
)
from .poly_model import (
    Poly, kx_antipode, kx_antipode_series, kx_delta, kx_derivation, kx_P, morphism_check,
    phi_bar, poly_tensor, PolyTensor2, PolyTensor3,
)
from .textio import serialize
from .utils import format_duration, get_current_datetime, get_current_timestamp, logger

Failure = Optional[Tuple[str, Any, Any]]

SUITE_NAMES = (
    "coassoc", "leibniz", "cocycle", "equiv", "grading", "termcount", "breadth",
    "derivation", "nilpotency", "antipode", "morphism", "foissy", "kx", "sampled",
)


class Counterexample:
    """套件的最小反例"""

    def __init__(self, suite: str, subject: str, detail: str, expected: Any = None, actual: Any = None):
        """初始化反例

        Args:
            suite: 套件名
            subject: 反例对象的规范文本
            detail: 失败的定律
            expected: 期望值
            actual: 实际值
        """
        self.suite = suite
        self.subject = subject
        self.detail = detail
        self.expected = None if expected is None else serialize(expected)
        self.actual = None if actual is None else serialize(actual)

    def to_dict(self) -> Dict:
        return {
            "suite": self.suite,
            "subject": self.subject,
            "detail": self.detail,
            "expected": self.expected,
            "actual": self.actual,
        }

    def __str__(self) -> str:
        lines = [f"counterexample for {self.suite}: {self.subject}", f"  {self.detail}"]
        if self.expected is not None:
            lines.append(f"  expected: {self.expected}")
            lines.append(f"  actual:   {self.actual}")
        return "\n".join(lines)


class SuiteResult:
    """一次套件运行的结果"""

    def __init__(self, suite: str, max_vertices: int, alphabet: List[str]):
        self.suite = suite
        self.max_vertices = max_vertices
        self.alphabet = list(alphabet)
        self.checked = 0
        self.counterexample: Optional[Counterexample] = None
        self.elapsed = 0.0
        self.timestamp = get_current_timestamp()

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_dict(self) -> Dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checked": self.checked,
            "max_vertices": self.max_vertices,
            "alphabet": self.alphabet,
            "elapsed": round(self.elapsed, 6),
            "timestamp": self.timestamp,
            "datetime": get_current_datetime(),
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.suite}: {status} ({self.checked} checked, {format_duration(self.elapsed)})"


def mutated_delta_eps(F) -> Tensor2:
    """故意损坏的 Δε：翻转左腿为 1 的项的符号，用于自检"""
    return Tensor2((key, -c if key[0].is_unit else c) for key, c in delta_eps(F).items())


def _mismatch(detail: str, expected: Any, actual: Any) -> Failure:
    if expected == actual:
        return None
    return detail, expected, actual


def _first_failure(*checks: Callable[[], Failure]) -> Failure:
    for check in checks:
        failure = check()
        if failure is not None:
            return failure
    return None


class SuiteRunner:
    """验证套件执行器，在线程池中对检查对象分片"""

    def __init__(self, config: Config, mutate: bool = False):
        """初始化执行器

        Args:
            config: 配置对象
            mutate: 为 True 时以损坏的 Δε 运行，用于检验套件本身
        """
        self.config = config
        self.mutate = mutate
        self.delta: Coproduct = mutated_delta_eps if mutate else delta_eps
        self.workers = config.get("verification.workers", 1)
        self.stop_on_first_failure = config.get("verification.stop_on_first_failure", True)
        self.sample_count = config.get("verification.sample_count", 25)
        self.sample_seed = config.get("verification.sample_seed", 20240101)
        self.max_degree = config.get("poly_model.max_degree", 12)

        self.results: List[SuiteResult] = []
        self._lock = threading.Lock()
        self._d_powers: List[Endo] = [D_EPS]

        self.suites: Dict[str, Tuple[Callable[[int, List[str]], Iterable], Callable[[Any], Failure]]] = {
            "coassoc": (self._forests, self._check_coassoc),
            "leibniz": (self._pairs, self._check_leibniz),
            "cocycle": (self._forests, self._check_cocycle),
            "equiv": (self._forests, self._check_equiv),
            "grading": (self._forests, self._check_grading),
            "termcount": (self._forests, self._check_termcount),
            "breadth": (self._forests, self._check_breadth),
            "derivation": (self._pairs, self._check_derivation),
            "nilpotency": (self._forests, self._check_nilpotency),
            "antipode": (self._forests, self._check_antipode),
            "morphism": (self._forests, self._check_morphism),
            "foissy": (self._undecorated, self._check_foissy),
            "kx": (self._degrees, self._check_kx),
            "sampled": (self._samples, self._check_sampled),
        }

    # ------------------------------------------------------------ subjects

    @staticmethod
    def _forests(max_vertices: int, alphabet: List[str]) -> Iterator[Forest]:
        return enumerate_up_to(max_vertices, alphabet)

    @staticmethod
    def _pairs(max_vertices: int, alphabet: List[str]) -> Iterator[Tuple[Forest, Forest]]:
        return enumerate_pairs(max_vertices, alphabet)

    @staticmethod
    def _undecorated(max_vertices: int, alphabet: List[str]) -> Iterator[Forest]:
        return enumerate_up_to(max_vertices, ())

    def _degrees(self, max_vertices: int, alphabet: List[str]) -> Iterable[int]:
        return range(self.max_degree + 1)

    def _samples(self, max_vertices: int, alphabet: List[str]) -> Iterable[Tuple]:
        basis = list(enumerate_up_to(min(max_vertices, 4), alphabet))
        endos = [IDENTITY, D_EPS, ANTIPODE, compose(D_EPS, D_EPS)]
        rng = random.Random(self.sample_seed)

        def lincomb() -> LinComb:
            return LinComb((rng.choice(basis), rng.randint(-3, 3)) for _ in range(rng.randint(1, 3)))

        samples = []
        for _ in range(self.sample_count):
            f, g, h = (rng.choice(endos) for _ in range(3))
            t = tensor(lincomb(), lincomb())
            samples.append((rng.choice(basis), f, g, h, lincomb(), t, lincomb()))
        return samples

    @staticmethod
    def _describe(subject: Any) -> str:
        if isinstance(subject, Forest):
            return subject.key
        if isinstance(subject, int):
            return f"degree {subject}"
        if isinstance(subject, tuple) and len(subject) == 2:
            return f"({subject[0].key}, {subject[1].key})"
        return f"sample on {subject[0].key} with {subject[1].name}, {subject[2].name}, {subject[3].name}"

    # ------------------------------------------------------------ checks

    def _check_coassoc(self, F: Forest) -> Failure:
        first = self.delta(F)
        return _mismatch(
            "(id (x) D)D(F) = (D (x) id)D(F)",
            expand_left(first, self.delta),
            expand_right(first, self.delta),
        )

    def _check_leibniz(self, pair: Tuple[Forest, Forest]) -> Failure:
        F1, F2 = pair
        expected = act_left(LinComb.of(F1), self.delta(F2)) + act_right(self.delta(F1), LinComb.of(F2))
        return _mismatch("D(F1 F2) = F1.D(F2) + D(F1).F2", expected, self.delta(concat(F1, F2)))

    def _check_cocycle(self, F: Forest) -> Failure:
        expected = Tensor2.of(F, UNIT) + graft_right(self.delta(F))
        return _mismatch("D(B+(F)) = F (x) 1 + (id (x) B+)D(F)", expected, self.delta(bplus(F)))

    def _check_equiv(self, F: Forest) -> Failure:
        return _mismatch("recursive coproduct = sum over vertices of B_a (x) R_a", delta_eps_comb(F), self.delta(F))

    def _check_grading(self, F: Forest) -> Failure:
        for (left, right), _ in self.delta(F).items():
            if left.vertex_count + right.vertex_count != F.vertex_count - 1:
                return f"term {left.key} (x) {right.key} breaks |B| + |R| = |F| - 1", None, None
        return None

    def _check_termcount(self, F: Forest) -> Failure:
        t = self.delta(F)
        if len(t) != F.vertex_count:
            return f"{len(t)} terms instead of {F.vertex_count}", None, t
        for _, c in t.items():
            if c != 1:
                return f"coefficient {c} instead of 1", None, t
        return None

    def _check_breadth(self, F: Forest) -> Failure:
        return _mismatch("sum over trees T_i of (T_1..T_{i-1}).D(T_i).(T_{i+1}..)", delta_eps_breadth_expansion(F), self.delta(F))

    def _check_derivation(self, pair: Tuple[Forest, Forest]) -> Failure:
        F1, F2 = pair
        expected = lc_mul(LinComb.of(F1), d_eps(F2)) + lc_mul(d_eps(F1), LinComb.of(F2))
        return _mismatch("D_eps(F1 F2) = F1 D_eps(F2) + D_eps(F1) F2", expected, d_eps(concat(F1, F2)))

    def _conv_power(self, k: int) -> Endo:
        with self._lock:
            while len(self._d_powers) < k:
                self._d_powers.append(convolve(self._d_powers[-1], D_EPS))
            return self._d_powers[k - 1]

    def _check_nilpotency(self, F: Forest) -> Failure:
        bound = F.vertex_count + 1
        value = self._conv_power(bound).on_basis(F)
        if not value.is_zero():
            return f"convolution power {bound} of D_eps does not vanish", LinComb.zero(), value
        iterated = LinComb.of(F)
        for _ in range(bound):
            iterated = D_EPS(iterated)
        if not iterated.is_zero():
            return f"composition power {bound} of D_eps does not vanish", LinComb.zero(), iterated
        return None

    def _check_antipode(self, F: Forest) -> Failure:
        if not antipode_check(F):
            return "antipode equations", None, antipode(F)
        return _mismatch("series antipode = recursive antipode", antipode_recursive(F), antipode(F))

    def _check_morphism(self, F: Forest) -> Failure:
        if not morphism_check(F):
            return "universal morphism is not compatible with coproduct, antipode and operator", None, phi_bar(F)
        return _mismatch("phi_bar(F) = x^|F|", Poly.monomial(F.vertex_count), phi_bar(F))

    def _check_foissy(self, F: Forest) -> Failure:
        first = delta_foissy(F)
        failure = _mismatch(
            "Foissy coproduct is coassociative",
            expand_left(first, delta_foissy),
            expand_right(first, delta_foissy),
        )
        if failure is not None:
            return failure
        for k in range(1, len(F)):
            F1, F2 = Forest(F.trees[:k]), Forest(F.trees[k:])
            expected = (
                act_left(LinComb.of(F1), delta_foissy(F2))
                + act_right(delta_foissy(F1), LinComb.of(F2))
                - Tensor2.of(F1, F2)
            )
            failure = _mismatch(f"product rule at cut {k}", expected, first)
            if failure is not None:
                return failure
        return None

    def _check_kx(self, n: int) -> Failure:
        p = Poly.monomial(n)
        delta = kx_delta(p)

        def coassoc() -> Failure:
            left = PolyTensor3(((a, b, j), c * d) for (i, j), c in delta.items() for (a, b), d in kx_delta(Poly.monomial(i)).items())
            right = PolyTensor3(((i, a, b), c * d) for (i, j), c in delta.items() for (a, b), d in kx_delta(Poly.monomial(j)).items())
            return None if left == right else ("k[x] coproduct is coassociative", None, None)

        def cocycle() -> Failure:
            grafted = PolyTensor2(((i, j + 1), c) for (i, j), c in delta.items())
            return _mismatch("D(P(p)) = p (x) 1 + (id (x) P)D(p)", poly_tensor(p, Poly.one()) + grafted, kx_delta(kx_P(p)))

        def closed_form() -> Failure:
            expected = -((Poly.x() - Poly.one()) ** n)
            return _first_failure(
                lambda: _mismatch("S(x^n) = -(x - 1)^n", expected, kx_antipode(p)),
                lambda: _mismatch("closed antipode = truncated series", kx_antipode_series(p), kx_antipode(p)),
            )

        def antipode_equations() -> Failure:
            base = kx_antipode(p) + p
            left, right = base, base
            for (i, j), c in delta.items():
                left = left + (kx_antipode(Poly.monomial(i)) * Poly.monomial(j)).scale(c)
                right = right + (Poly.monomial(i) * kx_antipode(Poly.monomial(j))).scale(c)
            if left.is_zero() and right.is_zero():
                return None
            return "antipode equations in k[x]", Poly.zero(), left if not left.is_zero() else right

        def leibniz() -> Failure:
            for m in range(self.max_degree - n + 1):
                q = Poly.monomial(m)
                expected = kx_delta(q).act_left(p) + kx_delta(p).act_right(q)
                failure = _mismatch(f"D(x^{n} x^{m}) = x^{n}.D(x^{m}) + D(x^{n}).x^{m}", expected, kx_delta(p * q))
                if failure is not None:
                    return failure
            return None

        def derivation() -> Failure:
            return _mismatch("m D(x^n) = n x^(n-1)", kx_derivation(p), _multiply_poly_legs(delta))

        return _first_failure(coassoc, cocycle, closed_form, antipode_equations, leibniz, derivation)

    def _check_sampled(self, sample: Tuple) -> Failure:
        F, f, g, h, a, t, b = sample

        def convolution_associativity() -> Failure:
            left = convolve(convolve(f, g), h).on_basis(F)
            right = convolve(f, convolve(g, h)).on_basis(F)
            return _mismatch("(f * g) * h = f * (g * h)", left, right)

        def circular_identities() -> Failure:
            return _first_failure(
                lambda: _mismatch("f (*) 0 = f", f.on_basis(F), circ_convolve(f, ZERO).on_basis(F)),
                lambda: _mismatch("S (*) id = 0", LinComb.zero(), circ_convolve(ANTIPODE, IDENTITY).on_basis(F)),
                lambda: _mismatch("id (*) S = 0", LinComb.zero(), circ_convolve(IDENTITY, ANTIPODE).on_basis(F)),
            )

        def bimodule() -> Failure:
            return _mismatch("a.(t.b) = (a.t).b", act_right(act_left(a, t), b), act_left(a, act_right(t, b)))

        def recursive_antipode() -> Failure:
            return _mismatch("S agrees with the recursive solution", RECURSIVE_ANTIPODE(a), ANTIPODE(a))

        return _first_failure(convolution_associativity, circular_identities, bimodule, recursive_antipode)

    # ------------------------------------------------------------ running

    def _evaluate(self, check: Callable[[Any], Failure], subjects: List[Any]) -> List[Failure]:
        if self.workers <= 1 or len(subjects) <= 1:
            return [check(subject) for subject in subjects]
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            return list(executor.map(check, subjects))

    def run(self, name: str, max_vertices: int, alphabet: Iterable[str]) -> SuiteResult:
        """运行单个套件

        Args:
            name: 套件名
            max_vertices: 森林的顶点数上界（森林对为总顶点数上界）
            alphabet: 生成元集合

        Returns:
            套件结果，失败时附带最小反例

        Raises:
            ForestArgumentError: 未知的套件名或负的顶点数上界
        """
        if name not in self.suites:
            raise ForestArgumentError(f"unknown suite {name!r}, expected one of {', '.join(SUITE_NAMES)} or all")
        if max_vertices < 0:
            raise ForestArgumentError(f"max vertices must be >= 0, got {max_vertices}")
        alphabet = list(alphabet)
        subjects_of, check = self.suites[name]
        result = SuiteResult(name, max_vertices, alphabet)
        logger.info(f"Running suite {name} up to {max_vertices} vertices over {alphabet}")
        start = time.perf_counter()

        # 分批求值，批内保持枚举顺序，因此第一个失败即最小反例
        batch_size = max(1, self.workers) * 16
        batch: List[Any] = []
        subjects = iter(subjects_of(max_vertices, alphabet))
        exhausted = False
        while not exhausted and result.passed:
            batch = []
            for subject in subjects:
                batch.append(subject)
                if len(batch) >= batch_size:
                    break
            else:
                exhausted = True
            for subject, failure in zip(batch, self._evaluate(check, batch)):
                result.checked += 1
                if failure is not None:
                    detail, expected, actual = failure
                    result.counterexample = Counterexample(name, self._describe(subject), detail, expected, actual)
                    break

        result.elapsed = time.perf_counter() - start
        if result.passed:
            logger.info(f"Suite {name} passed on {result.checked} subjects in {format_duration(result.elapsed)}")
        else:
            logger.warning(f"Suite {name} failed on {result.counterexample.subject}: {result.counterexample.detail}")

        with self._lock:
            self.results.append(result)
        return result

    def run_many(self, name: str, max_vertices: int, alphabet: Iterable[str]) -> List[SuiteResult]:
        """运行一个套件，或在 name 为 "all" 时依次运行全部套件"""
        alphabet = list(alphabet)
        if name != "all":
            return [self.run(name, max_vertices, alphabet)]
        results = []
        for suite in SUITE_NAMES:
            result = self.run(suite, max_vertices, alphabet)
            results.append(result)
            if not result.passed and self.stop_on_first_failure:
                break
        return results

    def get_results(self, suite: Optional[str] = None, limit: int = 100) -> List[SuiteResult]:
        with self._lock:
            results = [r for r in self.results if suite is None or r.suite == suite]
        return results[-limit:]

    def get_stats(self) -> Dict:
        """已运行套件的统计"""
        with self._lock:
            results = list(self.results)
        return {
            "total": len(results),
            "passed": sum(1 for r in results if r.passed),
            "failed": sum(1 for r in results if not r.passed),
            "checked": sum(r.checked for r in results),
            "mutated": self.mutate,
        }


def _multiply_poly_legs(t) -> Poly:
    total = Poly.zero()
    for (i, j), c in t.items():
        total = total + Poly.monomial(i + j, c)
    return total
