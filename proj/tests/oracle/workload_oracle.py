#!/usr/bin/env python3
"""Independent oracle for the synthetic five-stage workload.

Re-implements the documented workload numerics (docs/numerics.md) in plain
Python floats, which are IEEE-754 doubles with the same rounding behaviour
as the C++ implementation. Every operation is written in the exact order
the docs pin down, so the resulting artifacts must match the C++ adapters
value-for-value. The canonical-config accuracy printed here is frozen as a
golden constant in the workload tests.
"""

import json

MASK = (1 << 64) - 1


def splitmix64(state: int):
    state = (state + 0x9E3779B97F4A7C15) & MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return state, (z ^ (z >> 31)) & MASK


def generate_dataset(seed: int, n_rows: int):
    rows = []
    state = seed & MASK
    for i in range(n_rows):
        label = i & 1
        feats = []
        for _ in range(4):
            state, u = splitmix64(state)
            frac = (u % 2000001) / 1000000.0
            feats.append(3.0 + frac if label == 1 else frac)
        rows.append((feats, label))
    return rows


def det_sqrt(v: float) -> float:
    if v == 0.0:
        return 0.0
    y = v if v >= 1.0 else 1.0
    for _ in range(64):
        y = 0.5 * (y + v / y)
    return y


def column_stats(rows, j):
    n = len(rows)
    s = 0.0
    for feats, _ in rows:
        s += feats[j]
    mean = s / n
    s2 = 0.0
    mn = rows[0][0][j]
    mx = rows[0][0][j]
    for feats, _ in rows:
        d = feats[j] - mean
        s2 += d * d
        if feats[j] < mn:
            mn = feats[j]
        if feats[j] > mx:
            mx = feats[j]
    return mean, det_sqrt(s2 / n), mn, mx


def standardize(rows):
    stats = [column_stats(rows, j) for j in range(4)]
    out = []
    for feats, label in rows:
        sf = []
        for j in range(4):
            mean, std, _, _ = stats[j]
            sf.append(feats[j] if std == 0.0 else (feats[j] - mean) / std)
        out.append((sf, label))
    return out, stats


def sigmoid(x: float) -> float:
    if x > 40.0:
        x = 40.0
    elif x < -40.0:
        x = -40.0
    a = -x if x < 0.0 else x
    t = x / (1.0 + a)
    return 0.5 + 0.5 * t


def dsigmoid(x: float) -> float:
    a = -x if x < 0.0 else x
    if a >= 40.0:
        return 0.0
    u = 1.0 + a
    return 0.5 / (u * u)


def dot(w, b, feats):
    z = w[0] * feats[0]
    z = z + w[1] * feats[1]
    z = z + w[2] * feats[2]
    z = z + w[3] * feats[3]
    return z + b


def train(rows, learning_rate: float, iterations: int):
    split = (len(rows) * 4) // 5
    train_rows = rows[:split]
    n = len(train_rows)
    w = [0.0, 0.0, 0.0, 0.0]
    b = 0.0
    for _ in range(iterations):
        g = [0.0, 0.0, 0.0, 0.0]
        gb = 0.0
        for feats, label in train_rows:
            z = dot(w, b, feats)
            p = sigmoid(z)
            d = (p - label) * dsigmoid(z)
            for j in range(4):
                g[j] += d * feats[j]
            gb += d
        for j in range(4):
            w[j] = w[j] - learning_rate * (g[j] / n)
        b = b - learning_rate * (gb / n)
    return w, b


def evaluate(rows, w, b):
    split = (len(rows) * 4) // 5
    test_rows = rows[split:]
    correct = 0
    for feats, label in test_rows:
        p = sigmoid(dot(w, b, feats))
        pred = 1 if p >= 0.5 else 0
        if pred == label:
            correct += 1
    return correct, len(test_rows)


def main() -> None:
    seed, n_rows, lr, iterations = 42, 200, 0.1, 200
    rows = generate_dataset(seed, n_rows)
    std_rows, stats = standardize(rows)
    w, b = train(std_rows, lr, iterations)
    correct, test_n = evaluate(std_rows, w, b)
    accuracy = correct / test_n

    print("canonical config: seed=42 n_rows=200 lr=0.1 iterations=200")
    print("first row:", json.dumps(rows[0][0]), "label", rows[0][1])
    print("feature0 stats: mean=%r std=%r min=%r max=%r" % stats[0])
    print("weights:", json.dumps(w))
    print("bias:", repr(b))
    print("correct=%d test_rows=%d accuracy=%r" % (correct, test_n, accuracy))

    # small instance used by the gradient finite-difference check
    small = generate_dataset(7, 5)
    small_std, _ = standardize(small)
    print("5-row instance (seed=7):")
    for feats, label in small_std:
        print(" ", json.dumps(feats), label)


if __name__ == "__main__":
    main()
