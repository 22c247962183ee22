from hypothesis import HealthCheck, settings

settings.register_profile(
    "cnls",
    deadline=None,  # jit warmup and array math can blow the default deadline
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("cnls")
