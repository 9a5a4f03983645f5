from __future__ import annotations

import pytest

from reptile_lab.scenarios import (Config, case_a_enumeration,
                                   final_case_analysis, run_scenario)


@pytest.fixture(scope="session")
def config():
    return Config()


@pytest.fixture(scope="session")
def case_analyses(config):
    return {key: final_case_analysis(key, config)
            for key in ("quarter", "fifth", "ninth")}


@pytest.fixture(scope="session")
def case_a_diagrams():
    return case_a_enumeration()


@pytest.fixture(scope="session")
def reports(config):
    cache = {}

    def get(name: str):
        if name not in cache:
            cache[name] = run_scenario(name, config)
        return cache[name]

    return get
