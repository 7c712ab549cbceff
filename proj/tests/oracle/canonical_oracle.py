#!/usr/bin/env python3
"""Independent canonical-serialization oracle.

Builds the fixture action and environment binding with plain Python dicts
and serializes them with json.dumps under the documented canonical rules
(sorted keys, no insignificant whitespace, UTF-8). The resulting bytes and
SHA-256 digests are frozen into the C++ test suite; this script exists so
the constants can be re-derived without the C++ implementation.
"""

import hashlib
import json

EMPTY_SHA = hashlib.sha256(b"").hexdigest()


def canonical(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False).encode("utf-8")


def fixture_action() -> dict:
    return {
        "id": "a7",
        "type": "train",
        "inputs": {
            "dataset": {"symbolic": "@node:a2/output:dataset_std"},
            "baseline": {"content": "sha-256:" + EMPTY_SHA},
            "cfg": {"inline": {"mode": "fast", "depth": 3}},
        },
        "parameters": {
            "learning_rate": 0.1,
            "iterations": 200,
            "verbose": False,
            "µ-tag": "unit",
        },
        "preconditions": [
            {"kind": "artifact_exists", "name": "dataset_std"},
            {"kind": "param_equals", "name": "iterations", "value": 200},
        ],
        "effects": [{"produces": "model"}],
        "metadata": {
            "environment_id": "env-fixture",
            "logical_timestamp": 7,
            "planner_config": {"name": "scripted"},
            "seeds": {"train": 42},
        },
    }


def environment_binding() -> dict:
    return {
        "adapter_versions": {
            "analyze": "1.0.0",
            "evaluate": "1.0.0",
            "load_data": "1.0.0",
            "preprocess": "1.0.0",
            "train": "1.0.0",
        },
        "engine_version": "0.1.0",
        "environment_id": "default",
        "seed_policy": {"entropy": "metadata.seeds"},
    }


def main() -> None:
    act = canonical(fixture_action())
    print("fixture action canonical bytes:")
    print(act.decode("utf-8"))
    print("fixture action sha256:", hashlib.sha256(act).hexdigest())

    env = canonical(environment_binding())
    print("env binding canonical bytes:")
    print(env.decode("utf-8"))
    print("env binding sha256:", hashlib.sha256(env).hexdigest())

    for payload in (b"", b"payload-one", b"payload-two"):
        print(f"sha256({payload!r}) =", hashlib.sha256(payload).hexdigest())


if __name__ == "__main__":
    main()
