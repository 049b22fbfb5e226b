# The MIT License (MIT)
#
# Copyright (c) 2026 The wogtoric Authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

import math
from fractions import Fraction


def gcd_of(values):
    return math.gcd(*values) if values else 0

def lcm_of(values):
    return math.lcm(*values) if values else 1

def xgcd(a, b):
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b) and g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1

    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1

    if a < 0:
        return -a, -x0, -y0

    return a, x0, y0

def positive_part(vector):
    return tuple(v if v > 0 else 0 for v in vector)

def negative_part(vector):
    return tuple(-v if v < 0 else 0 for v in vector)

def support(vector):
    ## 1-indexed, matching edge ids
    return frozenset(idx + 1 for idx, v in enumerate(vector) if v != 0)

def dot(row, vector):
    return sum(a * b for a, b in zip(row, vector))

def as_fractions(vector):
    return tuple(Fraction(v) for v in vector)

def is_zero(vector):
    return all(v == 0 for v in vector)

def denominators(vector):
    return [Fraction(v).denominator for v in vector]

def format_row(values, width):
    return " ".join(str(v).rjust(width) for v in values)
