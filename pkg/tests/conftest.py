# The aggregate modules (tests/test_all.py, tests/test_<pkg>.py) re-export the
# test classes of tests/tests_<pkg>/, so pytest collects the same hypothesis
# tests more than once. Suppress the resulting differing_executors health check.
from hypothesis import HealthCheck, settings

settings.register_profile(
    'pynetmod', suppress_health_check=[HealthCheck.differing_executors])
settings.load_profile('pynetmod')
