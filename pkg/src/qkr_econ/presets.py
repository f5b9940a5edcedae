"""Built-in scenarios and cipher circuits."""

from .core import CipherSpec, QuantumScenario

MANIA = QuantumScenario("mania", gate_speed_hz=6e10, ccy_cost_usd=50.0)
OPTIMISTIC = QuantumScenario("optimistic", gate_speed_hz=1e9, ccy_cost_usd=500.0)
STEADY = QuantumScenario("steady", gate_speed_hz=1e8, ccy_cost_usd=50000.0)

# Langenberg et al. depth; the feasibility worked example uses 57854.
AES128 = CipherSpec("aes128-d57894", key_bits=128, depth=57894, width=1000)
AES128_D57854 = CipherSpec("aes128-d57854", key_bits=128, depth=57854, width=1000)
# Older, deeper-per-query circuit (d ~ 1.5e4, w ~ 1e3 as used for batch oracles).
AES128_GRASSL = CipherSpec("aes128-grassl", key_bits=128, depth=15000, width=1000)
# No separate depth estimates are modelled for the longer keys.
AES192 = CipherSpec("aes192", key_bits=192, depth=57894, width=1000)
AES256 = CipherSpec("aes256", key_bits=256, depth=57894, width=1000)

SCENARIOS = {s.name: s for s in (MANIA, OPTIMISTIC, STEADY)}
CIPHERS = {c.name: c for c in (AES128, AES128_D57854, AES128_GRASSL, AES192, AES256)}

DEFAULT_SCENARIO = "mania"
DEFAULT_CIPHER = "aes128-d57894"
