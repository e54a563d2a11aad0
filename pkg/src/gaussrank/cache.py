"""Append-only cache of rank reports, one JSON record per line.

Long batch runs must survive interruptions, so the format is forgiving:
corrupt lines are skipped with a warning and never abort a read.  Writes
append a single line under an exclusive lock so concurrent runs can share
one cache file.  Previously stored records are never rewritten.
"""

from __future__ import annotations

import fcntl
import json
import os
import time
import warnings

ENV_VAR = "GAUSSRANK_CACHE"


def cache_key(datum, branch_points, policy_description):
    """Canonical lookup key for one pipeline request."""
    return json.dumps(
        {
            "m": datum.m,
            "a": list(datum.a),
            "branch_points": [str(t) for t in branch_points],
            "policy": policy_description,
        },
        sort_keys=True,
    )


class ResultsCache:
    """Line-delimited JSON cache at a fixed path."""

    def __init__(self, path):
        self.path = str(path)

    def lookup(self, key):
        """The first stored record for this key, or None."""
        if not os.path.exists(self.path):
            return None
        with open(self.path, "r", encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                except ValueError:
                    warnings.warn(
                        "skipping corrupt cache line %d in %s" % (lineno, self.path)
                    )
                    continue
                if record.get("key") == key:
                    return record.get("value")
        return None

    def store(self, key, value):
        """Append one record; appends are serialized by an exclusive lock."""
        record = json.dumps(
            {"key": key, "value": value, "timestamp": time.time()}, sort_keys=True
        )
        directory = os.path.dirname(os.path.abspath(self.path))
        os.makedirs(directory, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as handle:
            fcntl.flock(handle.fileno(), fcntl.LOCK_EX)
            try:
                handle.write(record + "\n")
                handle.flush()
            finally:
                fcntl.flock(handle.fileno(), fcntl.LOCK_UN)


def cache_from_options(path_option):
    """Cache from an explicit path or the environment, else None."""
    path = path_option or os.environ.get(ENV_VAR)
    return ResultsCache(path) if path else None
