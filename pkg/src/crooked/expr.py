"""Tiny expression language for foliation coefficients.

Allowed: numeric constants, the variable ``t``, ``exp``/``cosh``/``sinh``
calls, ``+``, ``*`` and unary minus.  Anything else is rejected at parse
time, so a coefficient string can never run arbitrary code.
"""

from __future__ import annotations

import ast
import math
from typing import Callable

FUNCTIONS = {"exp": math.exp, "cosh": math.cosh, "sinh": math.sinh}


class ExpressionError(ValueError):
    pass


def _check(node: ast.AST) -> None:
    if isinstance(node, ast.Expression):
        _check(node.body)
    elif isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, (int, float)):
            raise ExpressionError(f"unsupported constant {node.value!r}")
    elif isinstance(node, ast.Name):
        if node.id != "t":
            raise ExpressionError(f"unknown name {node.id!r}")
    elif isinstance(node, ast.BinOp):
        if not isinstance(node.op, (ast.Add, ast.Mult)):
            raise ExpressionError("only + and * are allowed")
        _check(node.left)
        _check(node.right)
    elif isinstance(node, ast.UnaryOp):
        if not isinstance(node.op, ast.USub):
            raise ExpressionError("only unary minus is allowed")
        _check(node.operand)
    elif isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in FUNCTIONS:
            raise ExpressionError("only exp, cosh and sinh may be called")
        if len(node.args) != 1 or node.keywords:
            raise ExpressionError(f"{node.func.id} takes exactly one argument")
        _check(node.args[0])
    else:
        raise ExpressionError(f"unsupported syntax: {type(node).__name__}")


def _eval(node: ast.AST, t: float) -> float:
    if isinstance(node, ast.Constant):
        return float(node.value)
    if isinstance(node, ast.Name):
        return t
    if isinstance(node, ast.BinOp):
        left, right = _eval(node.left, t), _eval(node.right, t)
        return left + right if isinstance(node.op, ast.Add) else left * right
    if isinstance(node, ast.UnaryOp):
        return -_eval(node.operand, t)
    return FUNCTIONS[node.func.id](_eval(node.args[0], t))


def compile_expr(text) -> Callable[[float], float]:
    """Parse a coefficient expression (or a bare number) into a function of t."""
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        value = float(text)
        return lambda t: value
    if not isinstance(text, str):
        raise ExpressionError(f"expected a string or number, got {type(text).__name__}")
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc.msg}") from None
    _check(tree)
    body = tree.body
    return lambda t: _eval(body, float(t))
