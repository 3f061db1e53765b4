"""Rota-Baxter operators on the Sweedler algebra H4."""

import json

from . import _core
from ._core import Error, __version__

__all__ = ["Error", "__version__", "run", "enumerate", "classify", "verify", "report", "families", "instantiate", "is_rb"]


def run(command, p=None, weight="1", strategy="auto", scope="", shards=1, seed=1, samples=0):
    return json.loads(_core.run(command, p, str(weight), strategy, scope, shards, seed, samples))


def enumerate(p=3, weight="1", strategy="auto", shards=1):
    return run("enumerate", p=p, weight=weight, strategy=strategy, shards=shards)


def classify(p=3, weight="1", strategy="auto", shards=1):
    return run("classify", p=p, weight=weight, strategy=strategy, shards=shards)


def verify(scope, p=None, weight="1", seed=1, samples=0, shards=1):
    return run("verify", p=p, weight=weight, scope=scope, seed=seed, samples=samples, shards=shards)


def report(p=3, seed=1, shards=1):
    return run("report", p=p, seed=seed, shards=shards)


def families():
    return json.loads(_core.families())


def instantiate(family, weight, params=()):
    return json.loads(_core.instantiate(family, str(weight), [str(x) for x in params]))


def is_rb(operator, p=None):
    return _core.is_rb(json.dumps(operator), p)
