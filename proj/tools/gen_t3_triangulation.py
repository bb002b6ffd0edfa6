#!/usr/bin/env python3
"""Emit the 3-torus triangulation shipped as data/t3.tri.

The cube [0,3]^3 with opposite faces identified is cut into 27 unit cubes,
each split into 6 tetrahedra along its main diagonal (Kuhn subdivision).
Vertex (i, j, k) has index i + 3j + 9k. Facets are written in path order
v, v+e_a, v+e_a+e_b, v+e_a+e_b+e_c and are not pre-oriented.
"""
import itertools
import sys

N = 3


def index(p):
    return (p[0] % N) + N * (p[1] % N) + N * N * (p[2] % N)


def facets():
    out = []
    for base in itertools.product(range(N), repeat=3):
        for perm in itertools.permutations(range(3)):
            p = list(base)
            simplex = [index(p)]
            for axis in perm:
                p[axis] += 1
                simplex.append(index(p))
            out.append(simplex)
    return out


def main():
    fs = facets()
    w = sys.stdout.write
    w("dim 3\n")
    w(f"facets {len(fs)}\n")
    for f in fs:
        w(" ".join(map(str, f)) + "\n")


if __name__ == "__main__":
    main()
