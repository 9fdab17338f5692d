"""Parser for the optical-chain mini-language.

    chain   := element (whitespace element)*
    element := name '(' number (',' number)* ')'

Example: ``"dist(1) lens(2) dist(1)"``. Elements are listed in the order the
beam meets them. Angles are radians.
"""
from dataclasses import dataclass
import math
import re

import numpy as np

from . import lens_system as _lens
from . import sl2c
from .errors import ChainSyntaxError

MAT_DET_TOL = 1e-6

ARITY = {
    "phase": 1,
    "rot": 1,
    "atten": 1,
    "xboost": 1,
    "lens": 1,
    "dist": 1,
    "mat": 8,
}
ANGLE_ELEMENTS = frozenset({"phase", "rot"})

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


@dataclass(frozen=True)
class Element:
    name: str
    args: tuple

    def matrix(self):
        if self.name in sl2c.GENERATORS:
            return sl2c.GENERATORS[self.name](self.args[0])
        if self.name == "lens":
            return _lens.lens(self.args[0]).astype(np.complex128)
        if self.name == "dist":
            return _lens.translation(self.args[0]).astype(np.complex128)
        return normalized_mat(self.args)

    def render(self):
        return f"{self.name}({','.join(repr(float(v)) for v in self.args)})"


@dataclass(frozen=True)
class ChainSpec:
    elements: tuple

    def matrices(self):
        return [e.matrix() for e in self.elements]

    def render(self):
        return " ".join(e.render() for e in self.elements)

    def with_degrees(self):
        """Copy with phase/rot arguments read as degrees and converted."""
        return ChainSpec(
            tuple(
                Element(e.name, tuple(math.radians(v) for v in e.args))
                if e.name in ANGLE_ELEMENTS
                else e
                for e in self.elements
            )
        )


def raw_mat(a):
    return np.array(
        [[complex(a[0], a[1]), complex(a[2], a[3])], [complex(a[4], a[5]), complex(a[6], a[7])]]
    )


def normalized_mat(a):
    """``mat(...)`` entries divided by sqrt(det) so the element is exactly unimodular."""
    m = raw_mat(a)
    return m / np.sqrt(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        return self.pos >= len(self.text)

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message, pos=None):
        raise ChainSyntaxError(message, (self.pos if pos is None else pos) + 1)

    def expect(self, char):
        if self.peek() != char:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.fail(f"expected {char!r}, found {found}")
        self.pos += 1

    def match(self, pattern, what):
        m = pattern.match(self.text, self.pos)
        if not m:
            self.fail(f"expected {what}")
        self.pos = m.end()
        return m


def _element(sc):
    start = sc.pos
    name = sc.match(_NAME, "element name").group()
    if name not in ARITY:
        sc.fail(f"unknown element {name!r}", start)
    sc.expect("(")
    args = []
    sc.skip_ws()
    if sc.peek() != ")":
        while True:
            sc.skip_ws()
            num_pos = sc.pos
            value = float(sc.match(_NUMBER, "number").group())
            if not math.isfinite(value):
                sc.fail("non-finite number", num_pos)
            args.append(value)
            sc.skip_ws()
            if sc.peek() != ",":
                break
            sc.pos += 1
    if len(args) != ARITY[name]:
        sc.fail(f"{name} takes {ARITY[name]} argument(s), got {len(args)}")
    sc.expect(")")
    element = Element(name, tuple(args))
    if name == "mat":
        err = sl2c.det_error(raw_mat(args))
        if err > MAT_DET_TOL:
            sc.fail(f"mat determinant deviates from 1 by {err:.3e}", start)
    if name == "lens" and args[0] == 0:
        sc.fail("lens focal length must be non-zero", start)
    return element


def parse_chain(text):
    if not text or not text.strip():
        raise ChainSyntaxError("empty chain", 1)
    sc = _Scanner(text)
    elements = []
    sc.skip_ws()
    while not sc.at_end():
        if elements and not sc.text[sc.pos - 1].isspace():
            sc.fail("elements must be separated by whitespace")
        elements.append(_element(sc))
        sc.skip_ws()
    return ChainSpec(tuple(elements))
