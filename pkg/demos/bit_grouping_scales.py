"""How the same bit string looks at coarser scales.

Groups a short binary string into b-bit symbols (most significant bit first)
and prints the regrouped strings with their normalized information I_b.  A
short string loses apparent information as b grows because most symbols of a
large alphabet never occur -- a finite-size effect.  A long random string
keeps I_b near 1 at every scale.
"""

import numpy as np

from infodyn import SymbolSequence, normalized_information, rescale

SHORT = "0 0 0 0 1 0 0 0 1 0 1 0 0 0 0 1 1 1 0 0 1 0 0 0 1 1 0 0 1 0 0 0"

print("a 32-bit string at four scales:")
bits = SymbolSequence.from_bits(SHORT)
for b in (1, 2, 4, 8):
    scaled = rescale(bits, b)
    rendered = " ".join(str(int(s)) for s in scaled.symbols)
    print(f"  b={b}  base {2**b:>3}  I_b={normalized_information(scaled):.7f}  {rendered}")

print()
print("a 2^20-bit random string at the same scales:")
rng = np.random.default_rng(7)
long_bits = SymbolSequence(rng.integers(0, 2, size=2**20), 1)
for b in (1, 2, 4, 8):
    scaled = rescale(long_bits, b)
    print(f"  b={b}  base {2**b:>3}  length {len(scaled):>7}  I_b={normalized_information(scaled):.7f}")

print()
print("the alternating string '1010...' flips from maximal to minimal information:")
alt = SymbolSequence.from_bits("10" * 16)
for b in (1, 2):
    print(f"  b={b}  I_b={normalized_information(rescale(alt, b)):.1f}")
