"""Parser and printer for the IF-THEN rule language.

::

    # comment
    IF f1_title is VH AND f4_position is H THEN importance is Important
    IF f2 is L THEN importance is Unimportant WITH 0.5

Keywords are case-insensitive, as are variable names (or their aliases) and
term labels; both are stored in their declared spelling. A clause may be
wrapped in parentheses. A rule may span several lines.
"""

from __future__ import annotations

import re
from typing import NamedTuple, Sequence

import numpy as np

from .errors import ConflictingRules, RuleSyntaxError, UnknownTerm, UnknownVariable
from .fuzzy import FuzzyRule, LinguisticVariable, RuleBase

__all__ = ["format_rule", "format_rules", "parse_rules"]

KEYWORDS = {"if", "and", "then", "is", "with"}

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\f\v]+)"
    r"|(?P<nl>\n)"
    r"|(?P<comment>\#[^\n]*)"
    r"|(?P<number>\d+(?:\.\d*)?|\.\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<lparen>\()"
    r"|(?P<rparen>\))"
)


class _Tok(NamedTuple):
    kind: str  # keyword, ident, number, lparen, rparen, eof
    text: str
    line: int
    col: int


def _lex(text):
    line, line_start = 1, 0
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise RuleSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        col = pos - line_start + 1
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "ident" and m.group().lower() in KEYWORDS:
            out.append(_Tok("keyword", m.group().lower(), line, col))
        elif kind not in ("ws", "comment"):
            out.append(_Tok(kind, m.group(), line, col))
        pos = m.end()
    out.append(_Tok("eof", "", line, pos - line_start + 1))
    return out


class _Parser:
    def __init__(self, text, inputs, output):
        self.toks = _lex(text)
        self.i = 0
        self.inputs = inputs
        self.output = output

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind, text=None):
        tok = self.take()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text.upper() if text else kind
            got = tok.text or "end of input"
            raise RuleSyntaxError(f"expected {want}, found {got!r}", tok.line, tok.col)
        return tok

    def clause(self):
        """``var is label``, optionally parenthesized; returns (var_tok, label_tok)."""
        paren = self.peek().kind == "lparen"
        if paren:
            self.take()
        var = self.expect("ident")
        self.expect("keyword", "is")
        label = self.expect("ident")
        if paren:
            self.expect("rparen")
        return var, label

    def resolve_input(self, tok):
        for v in self.inputs:
            if v.matches(tok.text):
                return v
        if self.output.matches(tok.text):
            raise UnknownVariable(
                f"line {tok.line}, column {tok.col}: output variable {tok.text!r} used as a condition"
            )
        raise UnknownVariable(f"line {tok.line}, column {tok.col}: unknown variable {tok.text!r}")

    @staticmethod
    def resolve_label(var, tok):
        try:
            return var.canonical_label(tok.text)
        except UnknownTerm:
            raise UnknownTerm(
                f"line {tok.line}, column {tok.col}: variable {var.name!r} has no term {tok.text!r}"
            ) from None

    def rule(self):
        self.expect("keyword", "if")
        antecedents = []
        seen = set()
        while True:
            var_tok, label_tok = self.clause()
            var = self.resolve_input(var_tok)
            if var.name in seen:
                raise RuleSyntaxError(f"variable {var.name!r} repeated in one rule", var_tok.line, var_tok.col)
            seen.add(var.name)
            antecedents.append((var.name, self.resolve_label(var, label_tok)))
            if self.peek().kind == "keyword" and self.peek().text == "and":
                self.take()
                continue
            break
        self.expect("keyword", "then")
        var_tok, label_tok = self.clause()
        if not self.output.matches(var_tok.text):
            raise UnknownVariable(
                f"line {var_tok.line}, column {var_tok.col}: {var_tok.text!r} is not the output variable"
            )
        consequent = self.resolve_label(self.output, label_tok)
        weight = 1.0
        if self.peek().kind == "keyword" and self.peek().text == "with":
            self.take()
            num = self.expect("number")
            weight = float(num.text)
            if not 0.0 < weight <= 1.0:
                raise RuleSyntaxError(f"rule weight {num.text} outside (0, 1]", num.line, num.col)
        order = {v.name: i for i, v in enumerate(self.inputs)}
        antecedents.sort(key=lambda p: order[p[0]])
        return FuzzyRule(tuple(antecedents), consequent, weight, self.output.name)

    def parse(self):
        rules = []
        lines = []
        while self.peek().kind != "eof":
            lines.append(self.peek().line)
            rules.append(self.rule())
        if not rules:
            raise RuleSyntaxError("no rules found", 1, 1)
        return rules, lines


def parse_rules(
    dsl_text: str,
    inputs: Sequence[LinguisticVariable],
    output: LinguisticVariable,
) -> RuleBase:
    rules, lines = _Parser(dsl_text, tuple(inputs), output).parse()
    try:
        return RuleBase(tuple(rules), source_text=dsl_text)
    except ConflictingRules as exc:
        # rewrite rule ordinals as source line numbers
        m = re.match(r"rules (\d+) and (\d+) (.*)", str(exc))
        if m:
            a, b = lines[int(m.group(1)) - 1], lines[int(m.group(2)) - 1]
            raise ConflictingRules(f"rules at lines {a} and {b} {m.group(3)}") from None
        raise


def format_rule(rule: FuzzyRule) -> str:
    conds = " AND ".join(f"{v} is {l}" for v, l in rule.antecedents)
    text = f"IF {conds} THEN {rule.output} is {rule.consequent}"
    if rule.weight != 1.0:
        text += f" WITH {np.format_float_positional(rule.weight, trim='-')}"
    return text


def format_rules(rule_base: RuleBase) -> str:
    return "".join(format_rule(r) + "\n" for r in rule_base)
