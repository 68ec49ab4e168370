"""Spectrum of x^p + y^p + z^p + xyz from its cubic part.

The cubic xyz + (higher terms) has three nodes on its projective curve, so
the spectrum follows from the node exponent alpha = 1 and the degree
p = 3 + k of the added term.

    python3 demos/yomdin_spectrum.py
"""

from jordanmax import spectrum_homogeneous, spectrum_yomdin

print("cubic with three nodes:", spectrum_homogeneous(2, 3, [1, 1, 1]))
for p in range(4, 9):
    sp = spectrum_yomdin(2, 3, p - 3, [1, 1, 1])
    print(f"p={p}: total {sp.total()} (3p - 1 = {3 * p - 1}), symmetric: {sp.is_symmetric(3)}")
    print("   ", sp)
