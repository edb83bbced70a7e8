"""Resource caps for the exponential parts of the engine.

Caps can be overridden through the ``TORUSJUMP_CAPS`` environment variable,
e.g. ``TORUSJUMP_CAPS="max_degree=60,max_basis=4000"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import ResourceLimitExceeded

ENV_VAR = "TORUSJUMP_CAPS"


@dataclass(frozen=True)
class Caps:
    max_degree: int = 40        # total degree of any polynomial produced by Buchberger / Bareiss
    max_basis: int = 3000       # intermediate Groebner basis size
    max_pairs: int = 200000     # critical pairs processed per basis computation
    max_minors: int = 100000    # minors enumerated per determinantal ideal
    max_subsets: int = 1 << 12  # variable subsets scanned by the dimension routine

    @classmethod
    def from_env(cls, environ=None) -> "Caps":
        text = (os.environ if environ is None else environ).get(ENV_VAR, "")
        return cls().override(text)

    def override(self, text: str) -> "Caps":
        if not text.strip():
            return self
        known = {f.name for f in fields(self)}
        updates = {}
        for item in text.split(","):
            if not item.strip():
                continue
            name, sep, value = item.partition("=")
            name = name.strip().replace("-", "_")
            if not sep or name not in known:
                raise ValueError(f"bad cap specification {item!r}; known caps: {sorted(known)}")
            updates[name] = int(value)
        return replace(self, **updates)


def default_caps() -> Caps:
    return Caps.from_env()


def check(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise ResourceLimitExceeded(f"resource limit exceeded: {what} = {value} > {limit}")
