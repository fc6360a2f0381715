from hypothesis import settings

# Exact big-rational arithmetic has noisy per-example timing; disable the
# deadline and keep example counts moderate so the suite stays fast.
settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")
