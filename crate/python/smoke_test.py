# SPDX-License-Identifier: Apache-2.0
"""Smoke test for the pyskewcyclic extension.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`.
"""

import pyskewcyclic as sc


def main():
    f4 = sc.Field("gf4")
    ring = sc.SkewRing(f4, 1)
    x2p1 = ring.xn_minus_1(2)
    pairs = [("X + 1", "X + 1"), ("X + a", "X + a^2"), ("X + a^2", "X + a")]
    for left, right in pairs:
        assert ring.parse(left) * ring.parse(right) == x2p1, (left, right)
    assert len(ring.right_divisors(2, 1)) == 3

    a = ring.parse("a*X^3 + X + a^2")
    g = ring.parse("X^2 + a")
    q, r = a.right_divmod(g)
    assert q * g + r == a
    assert ring.xn_minus_1(2).is_central()

    rows = sc.verify_tables()
    assert len(rows) == 9 and all(ok for _, ok in rows), rows

    bch = sc.BchCode(sc.Field("gf1024"), 7)
    code = bch.code
    assert (code.n, code.k, bch.t) == (10, 4, 3)
    assert str(code.generator) == (
        "X^6 + a^345*X^5 + a^643*X^4 + a^878*X^3 + a^670*X^2 + a^1020*X + a^777"
    )
    word = code.encode([3, None, 100, 0])
    assert code.is_codeword(word)
    assert code.is_codeword(code.theta_shift(word))
    received = list(word)
    received[1] = 17 if received[1] != 17 else 18
    received[6] = None
    res = bch.decode(received)
    assert res.corrected == word
    assert bch.roundtrip(500, 3, seed=1) == (500, 500)

    table_row = ring.parse(
        "X^14 + X^13 + a*X^11 + X^10 + X^9 + X^8 + a*X^7 + X^6"
        " + a*X^5 + a^2*X^4 + a^2*X^2 + a*X + a^2"
    )
    c30 = sc.Code(30, table_row)
    assert c30.k == 16
    assert c30.min_distance_upper(100_000, seed=1) >= 9
    print("smoke test passed")


if __name__ == "__main__":
    main()
