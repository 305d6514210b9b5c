# Present so the shared helpers (_configs, _oracles) are importable from tests.
