"""
多项式文本解析

格式：若干项之和，项形如 "c*x^a*y^b*z^c"，c 为有理数（"3/2"）。
例如 "x^2*y - 3/2*z^3"。只接受齐次输入。
"""

from fractions import Fraction
from typing import Dict, Sequence, Tuple

from exceptions.data import PolynomialParseError

from .hpoly import HPoly
from .monomials import VARIABLES_R, check_variables


class _PolynomialParser:
    """递归下降解析器：poly := [±] term (± term)* ; term := factor (* factor)*"""

    def __init__(self, text: str, variables: Tuple[str, ...]):
        self.text = text
        self.variables = variables
        self.pos = 0

    def error(self, reason: str):
        raise PolynomialParseError(self.text, reason, self.pos + 1)

    def skip_spaces(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("需要整数")
        return int(self.text[start : self.pos])

    def factor(self, exps: list) -> Fraction:
        ch = self.peek()
        if ch.isdigit():
            value = Fraction(self.integer())
            if self.peek() == "/":
                self.pos += 1
                denominator = self.integer()
                if denominator == 0:
                    self.error("分母为 0")
                value /= denominator
            return value
        if ch in self.variables:
            self.pos += 1
            power = 1
            if self.peek() == "^":
                self.pos += 1
                power = self.integer()
            exps[self.variables.index(ch)] += power
            return Fraction(1)
        self.error(f"无法识别的字符 '{ch}'" if ch else "意外的输入结尾")

    def term(self) -> Tuple[Tuple[int, ...], Fraction]:
        exps = [0] * len(self.variables)
        coeff = self.factor(exps)
        while self.peek() == "*":
            self.pos += 1
            coeff *= self.factor(exps)
        return tuple(exps), coeff

    def parse(self) -> Dict[Tuple[int, ...], Fraction]:
        if not self.text.strip():
            self.error("空多项式")
        terms: Dict[Tuple[int, ...], Fraction] = {}
        degree = None
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            start = self.pos
            exps, coeff = self.term()
            if degree is None:
                degree = sum(exps)
            elif sum(exps) != degree:
                self.pos = start
                self.error(f"输入不齐次：次数 {sum(exps)} ≠ {degree}")
            terms[exps] = terms.get(exps, Fraction(0)) + sign * coeff
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                self.error(f"需要 '+' 或 '-'，得到 '{ch}'")
            sign = -1 if ch == "-" else 1
            self.pos += 1
        self.degree = degree
        return terms


def parse_hpoly(text: str, variables: Sequence[str] = VARIABLES_R) -> HPoly:
    """
    解析齐次多项式文本

    Args:
        text: 多项式文本
        variables: 变量元组，默认 (x, y, z)

    Returns:
        HPoly: 解析结果

    Raises:
        PolynomialParseError: 格式错误或不齐次
    """
    parser = _PolynomialParser(text, check_variables(variables))
    terms = parser.parse()
    return HPoly.from_terms(terms, parser.variables, parser.degree)
