#!/usr/bin/env python3
"""Symbolic reference values for half-space Green residual derivatives.

The C++ evaluator computes mixed x/y derivatives of the regular part
R(x,y) = F(x-y) - G(x,y) of the half-space Dirichlet Green function for the
three model operators (2-D/3-D Laplacian, 2-D biharmonic) from hand-coded
closed forms.  This script differentiates the same closed forms with sympy
and prints a C++ table of sample values used by the unit tests as an
independent cross-check.  Run from the repository root:

    python3 tools/gen_green_derivs.py > /tmp/green_deriv_refs.inc

The table is pasted into tests/test_kernels.cpp (kept checked in there); the
script only needs to be re-run if the sample points or index sets change.
"""

import itertools
import sympy as sp


def laplace_2d_R(x, y):
    v1, v2 = x[0] - y[0], x[1] + y[1]
    return -sp.log(v1 * v1 + v2 * v2) / (4 * sp.pi)


def laplace_3d_R(x, y):
    v1, v2, v3 = x[0] - y[0], x[1] - y[1], x[2] + y[2]
    return 1 / (4 * sp.pi * sp.sqrt(v1 * v1 + v2 * v2 + v3 * v3))


def bilaplace_2d_R(x, y):
    # Regular part of Boggio's half-plane Green function for the biharmonic
    # operator: 8*pi*R = |u|^2 (log|v| + 1/2) - |v|^2 / 2 with u = x - y and
    # v = x - ybar.
    u2 = (x[0] - y[0]) ** 2 + (x[1] - y[1]) ** 2
    v2 = (x[0] - y[0]) ** 2 + (x[1] + y[1]) ** 2
    return (u2 * (sp.log(v2) / 2 + sp.Rational(1, 2)) - v2 / 2) / (8 * sp.pi)


def emit(name, R, n, m, points):
    xs = sp.symbols("x0:3", real=True)
    ys = sp.symbols("y0:3", real=True)
    expr = R(xs, ys)
    rows = []
    idx = [a for a in itertools.product(range(m + 1), repeat=n) if sum(a) == m]
    idx.sort(key=lambda a: tuple(-c for c in a))  # graded-lex tie order
    for alpha in idx:
        for beta in idx:
            d = expr
            for i, k in enumerate(alpha):
                if k:
                    d = sp.diff(d, xs[i], k)
            for j, k in enumerate(beta):
                if k:
                    d = sp.diff(d, ys[j], k)
            for (px, py) in points:
                subs = {xs[i]: px[i] for i in range(n)}
                subs.update({ys[j]: py[j] for j in range(n)})
                val = sp.N(d.subs(subs), 22)
                a3 = tuple(alpha) + (0,) * (3 - n)
                b3 = tuple(beta) + (0,) * (3 - n)
                rows.append(
                    "    {%s, %s, {%r, %r, %r}, {%r, %r, %r}, %s}," % (
                        "{%d, %d, %d}" % a3, "{%d, %d, %d}" % b3,
                        px[0], px[1], px[2] if n == 3 else 0.0,
                        py[0], py[1], py[2] if n == 3 else 0.0,
                        sp.ccode(val)))
    print("// %s: D^alpha_x D^beta_y R at sample points (alpha, beta, x, y, value)" % name)
    print("static const DerivRef %s_refs[] = {" % name)
    print("\n".join(rows))
    print("};")
    print()


def main():
    pts2 = [((0.3, 0.7), (-0.2, 0.4)), ((1.1, 0.25), (0.6, 1.3)),
            ((-0.4, 0.9), (0.5, 0.15))]
    pts3 = [((0.3, -0.1, 0.7), (-0.2, 0.5, 0.4)), ((1.0, 0.2, 0.3), (0.1, -0.4, 1.1))]
    emit("laplace_2d", laplace_2d_R, 2, 1, pts2)
    emit("laplace_3d", laplace_3d_R, 3, 1, pts3)
    emit("bilaplace_2d", bilaplace_2d_R, 2, 2, pts2)


if __name__ == "__main__":
    main()
