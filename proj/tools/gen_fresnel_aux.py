#!/usr/bin/env python3
# Copyright 2026 The clothoidfit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates core/src/fresnel_aux_tables.inc.

Chebyshev expansions of the scaled Fresnel auxiliary functions
    F(w) = pi * t * f(t),   G(w) = pi^2 * t^3 * g(t),   w = 1 / t^2
on a few intervals of t between the power-series and asymptotic regimes.
Requires mpmath. Usage: gen_fresnel_aux.py > core/src/fresnel_aux_tables.inc
"""
import mpmath as mp

mp.mp.dps = 60
INTERVALS = [(1.6, 2.4), (2.4, 3.6), (3.6, 5.5)]
NODES = 48
CUTOFF = mp.mpf("5e-19")


def aux(t):
    t = mp.mpf(t)
    u = mp.pi * t * t / 2
    c = mp.fresnelc(t) - mp.mpf(1) / 2
    s = mp.fresnels(t) - mp.mpf(1) / 2
    f = c * mp.sin(u) - s * mp.cos(u)
    g = -c * mp.cos(u) - s * mp.sin(u)
    return f, g


def chebyshev(fun, lo, hi):
    xs = [mp.cos(mp.pi * (k + mp.mpf(1) / 2) / NODES) for k in range(NODES)]
    vals = [fun((hi - lo) / 2 * x + (hi + lo) / 2) for x in xs]
    coeffs = []
    for j in range(NODES):
        acc = mp.fsum(vals[k] * mp.cos(mp.pi * j * (k + mp.mpf(1) / 2) / NODES)
                      for k in range(NODES))
        coeffs.append(2 * acc / NODES)
    coeffs[0] /= 2
    while abs(coeffs[-1]) < CUTOFF:
        coeffs.pop()
    return coeffs


def emit(name, coeffs):
    body = ",\n".join("    %s" % mp.nstr(c, 20, min_fixed=0, max_fixed=0) for c in coeffs)
    return "  {%d,\n   {\n%s}},\n" % (len(coeffs), body)


def main():
    print("// Generated by tools/gen_fresnel_aux.py. Do not edit.")
    print("// Chebyshev series in w = 1/t^2 for F = pi t f(t) and G = pi^2 t^3 g(t).")
    print("inline constexpr AuxInterval kAuxIntervals[] = {")
    for t0, t1 in INTERVALS:
        w0 = 1 / mp.mpf(t1) ** 2
        w1 = 1 / mp.mpf(t0) ** 2
        cf = chebyshev(lambda w: aux(1 / mp.sqrt(w))[0] * mp.pi / mp.sqrt(w), w0, w1)
        cg = chebyshev(lambda w: aux(1 / mp.sqrt(w))[1] * mp.pi ** 2 / mp.sqrt(w) ** 3, w0, w1)
        print("  {%r, %r," % (t0, t1))
        print("   %s, %s," % (mp.nstr(w0, 20), mp.nstr(w1, 20)))
        print(emit("F", cf), end="")
        print(emit("G", cg), end="")
        print("  },")
    print("};")


if __name__ == "__main__":
    main()
