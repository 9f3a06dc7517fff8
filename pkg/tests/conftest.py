from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo",
    max_examples=80,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")
