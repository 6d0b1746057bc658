"""Shared helpers for the test suite."""

from e2crit.moebius import IDENTITY, MoebiusMap

_T = MoebiusMap(1, 1, 0, 1)
_TI = MoebiusMap(1, -1, 0, 1)
_S = MoebiusMap(0, -1, 1, 0)


def random_sl2z(rng, max_entry=10, max_len=8):
    """One random SL(2,Z) element with bounded entries, from generator words."""
    while True:
        g = IDENTITY
        for _ in range(int(rng.integers(1, max_len))):
            g = g @ [_T, _TI, _S][int(rng.integers(0, 3))]
        if max(abs(v) for v in (g.a, g.b, g.c, g.d)) <= max_entry:
            return g
