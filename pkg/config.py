# Date: 10-18-2026
# Author: plucker-degrees developers
# Purpose: Default cutoffs and worker count, overridable through the environment
# Environment variables:
#   PLUCKER_SYT_CUTOFF: Largest weight the standard Young tableau brute force will enumerate as int (default 12, at most 14)
#   PLUCKER_FORMULA_CUTOFF: Largest weight the formula methods will accept as int (default 20, at most 20)
#   PLUCKER_WORKERS: Number of worker processes for sweeps as int (default 1)

import os

SYT_SAFETY_LIMIT = 14
FORMULA_SAFETY_LIMIT = 20


def _read_int(name, default, limit=None):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        value = default
    else:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError("{} must be an integer, got {!r}".format(name, raw))
    if value < 0:
        raise ValueError("{} must be non-negative, got {}".format(name, value))
    if limit is not None and value > limit:
        raise ValueError("{}={} exceeds the safety limit {}".format(name, value, limit))
    return value


def syt_cutoff():
    return _read_int("PLUCKER_SYT_CUTOFF", 12, SYT_SAFETY_LIMIT)


def formula_cutoff():
    return _read_int("PLUCKER_FORMULA_CUTOFF", 20, FORMULA_SAFETY_LIMIT)


def workers():
    return max(1, _read_int("PLUCKER_WORKERS", 1))


def check_cutoff(kind, value):
    # kind is "syt" or "formula"
    limit = SYT_SAFETY_LIMIT if kind == "syt" else FORMULA_SAFETY_LIMIT
    if value > limit:
        raise ValueError("{} cutoff {} exceeds the safety limit {}".format(kind, value, limit))
    return value
