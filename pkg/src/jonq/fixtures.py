"""Built-in instances used by the selftest command and the test suite."""

from __future__ import annotations

import importlib.resources as resources

from jonq.instance import parse_instance

FIXTURE_NAMES = ("identity", "plane", "space", "nzd")


def fixture_text(name):
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; have {FIXTURE_NAMES}")
    return resources.files("jonq").joinpath("data", f"{name}.jonq").read_text()


def fixture_path(name):
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; have {FIXTURE_NAMES}")
    return str(resources.files("jonq").joinpath("data", f"{name}.jonq"))


def load_fixture(name):
    return parse_instance(fixture_text(name))
