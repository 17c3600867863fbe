# Copyright 2026 The subsys Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact equilibrium order parameter of the mean-field plane model.

Each plane is an open-boundary n x n Ising model with couplings j_y, j_z.
A row transfer matrix tracks the column-parity vector e of one plane,
restricted to the ordered phase (weight(e) <= n // 2). The n planes are
independent, so the code-level parity is the XOR-convolution of n copies,
done with a Walsh-Hadamard transform. The decoder fails when the summed
parity vector has weight > n // 2; OP = 1 - 2 * P(fail).

Usage: python3 plane_transfer_matrix.py [n] [T] [j_y] [j_z]
"""

import sys

import numpy as np


def plane_parity_distribution(n, beta, j_y, j_z):
    size = 1 << n
    idx = np.arange(size)
    bits = (idx[:, None] >> np.arange(n)) & 1
    rows = 1.0 - 2.0 * bits
    intra = (rows[:, :-1] * rows[:, 1:]).sum(axis=1)
    vertical = np.exp(beta * j_y * (rows @ rows.T))
    field = np.exp(beta * j_z * intra)
    state = np.diag(field)
    for _ in range(n - 1):
        nxt = (vertical @ state) * field[:, None]
        state = np.empty_like(nxt)
        for r in range(size):
            state[r, idx ^ r] = nxt[r, idx]
        state /= state.sum()
    return state.sum(axis=0)


def walsh_hadamard(a):
    a = a.copy()
    h = 1
    while h < len(a):
        for i in range(0, len(a), 2 * h):
            x = a[i:i + h].copy()
            y = a[i + h:i + 2 * h].copy()
            a[i:i + h] = x + y
            a[i + h:i + 2 * h] = x - y
        h *= 2
    return a


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 9
    temperature = float(sys.argv[2]) if len(sys.argv) > 2 else 1.0
    j_y = float(sys.argv[3]) if len(sys.argv) > 3 else 1.0
    j_z = float(sys.argv[4]) if len(sys.argv) > 4 else 1.0
    size = 1 << n
    weight = np.array([bin(c).count("1") for c in range(size)])
    p = plane_parity_distribution(n, 1.0 / temperature, j_y, j_z)
    p = np.where(weight <= n // 2, p, 0.0)
    p /= p.sum()
    total = walsh_hadamard(walsh_hadamard(p) ** n) / size
    fail = total[weight > n // 2].sum()
    print(f"n={n} T={temperature} fail={fail:.6f} order_parameter={1 - 2 * fail:.6f}")


if __name__ == "__main__":
    main()
