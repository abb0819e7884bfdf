"""Exact toolkit for two-generator rotation groups in SO(3).

Every call returns the same payload the command-line tool prints under
"result", parsed into Python objects.
"""

import json

from . import _core
from ._core import (
    Error,
    GroupSpec,
    HypothesisError,
    InternalError,
    SCHEMA_VERSION,
    UnsupportedCase,
    UsageError,
    parse_word,
)

gnm = GroupSpec.gnm
gpq = GroupSpec.gpq
hatg = GroupSpec.hatg


def classify(spec, express=False):
    return json.loads(_core.classify(spec, express))


def is_identity(spec, word):
    return json.loads(_core.is_identity(spec, word))["identity"]


def normalize(spec, word):
    return json.loads(_core.normalize(spec, word))


def verify(spec):
    return json.loads(_core.verify(spec))


def amalgam(spec, word):
    return json.loads(_core.amalgam(spec, word))


def certify(m, word, variant="lemma"):
    return json.loads(_core.certify(m, word, variant))


def ext2(word, p, q):
    return json.loads(_core.ext2(word, p, q))


def free_cert(m, word):
    return json.loads(_core.free_cert(m, word))


def foundation_batch(m, max_n=3, max_exp=3):
    return json.loads(_core.foundation_batch(m, max_n, max_exp))


def free_batch(m, max_length=5):
    return json.loads(_core.free_batch(m, max_length))


def enumerate_ball(spec, radius, budget=0):
    return json.loads(_core.enumerate(spec, radius, budget))


def growth(spec, radius, budget=0):
    return json.loads(_core.growth(spec, radius, budget))


def document(command, inputs, result):
    """Wrap a payload in the versioned report envelope."""
    return json.loads(_core.make_document(command, json.dumps(inputs), json.dumps(result)))


__all__ = [
    "Error", "GroupSpec", "HypothesisError", "InternalError", "SCHEMA_VERSION", "UnsupportedCase",
    "UsageError", "amalgam", "certify", "classify", "document", "enumerate_ball", "ext2", "foundation_batch",
    "free_batch", "free_cert", "gnm", "gpq", "growth", "hatg", "is_identity", "normalize", "parse_word", "verify",
]
