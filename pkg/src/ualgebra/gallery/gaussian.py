"""The additive group of Gaussian integers, handled symbolically.

Endomorphisms are 2x2 integer matrices acting on (real, imaginary) parts;
the frame is (1, i), so sampling returns the matrix columns and the
extension rebuilds the matrix action.  The dilatation indicated by a is
multiplication by the integer a' + a''.
"""

from __future__ import annotations

import random

Gauss = tuple[int, int]  # (real part, imaginary part)
Endo = tuple[Gauss, Gauss]  # columns: image of 1, image of i


def apply_endo(h: Endo, a: Gauss) -> Gauss:
    (c0r, c0i), (c1r, c1i) = h
    ar, ai = a
    return (c0r * ar + c1r * ai, c0i * ar + c1i * ai)


def sample(h: Endo) -> tuple[Gauss, Gauss]:
    """r_U(h) = (h(1), h(i)): exactly the columns."""
    return (apply_endo(h, (1, 0)), apply_endo(h, (0, 1)))


def extend(M: tuple[Gauss, Gauss]) -> Endo:
    """Rebuild the endomorphism whose columns are the matrix."""
    return M


def gamma(a: Gauss, b: Gauss) -> Gauss:
    """The dilatation indicated by a multiplies by the integer a' + a''."""
    s = a[0] + a[1]
    return (s * b[0], s * b[1])


def gamma_via_extension(a: Gauss, b: Gauss) -> Gauss:
    """Generic route: extend the constant matrix at b, apply to a."""
    return apply_endo(extend((b, b)), a)


def j_map(a: Gauss) -> tuple[int, int]:
    """a = m0*1 + m1*i as a pair of integer multipliers."""
    return (a[0], a[1])


def j_inverse(m: tuple[int, int]) -> Gauss:
    return (m[0], m[1])


def gaussian_check(samples: int = 1000, seed: int = 0, entry_bound: int = 50,
                   box: int = 10) -> dict:
    rng = random.Random(seed)
    findings: dict = {"seed": seed, "samples": samples}

    def rand_gauss(bound):
        return (rng.randint(-bound, bound), rng.randint(-bound, bound))

    def rand_endo():
        return (rand_gauss(entry_bound), rand_gauss(entry_bound))

    ext_after_sample = all(
        apply_endo(extend(sample(h)), a) == apply_endo(h, a)
        for h in (rand_endo() for _ in range(samples))
        for a in (rand_gauss(1000),)
    )
    findings["extension_after_sampling_identity"] = ext_after_sample

    sample_after_ext = all(
        sample(extend(M)) == M for M in (rand_endo() for _ in range(samples))
    )
    findings["sampling_after_extension_identity"] = sample_after_ext

    gamma_ok = all(
        gamma(a, b) == gamma_via_extension(a, b)
        for a, b in ((rand_gauss(1000), rand_gauss(1000)) for _ in range(samples))
    )
    findings["gamma_formula"] = gamma_ok

    roundtrip_ok = all(
        j_inverse(j_map((r, i))) == (r, i) and j_map(j_inverse((r, i))) == (r, i)
        for r in range(-box, box + 1)
        for i in range(-box, box + 1)
    )
    findings["j_roundtrip_box"] = roundtrip_ok

    findings["status"] = "pass" if all(
        findings[k] for k in ("extension_after_sampling_identity",
                              "sampling_after_extension_identity",
                              "gamma_formula", "j_roundtrip_box")
    ) else "fail"
    return findings
