"""The additive group of integers, handled symbolically.

Its endomorphisms are exactly the multipliers b -> m*b, so the whole
pipeline collapses to integer identities: sampling an endomorphism at the
frame value 1 returns its multiplier, the extension multiplies, and the
endowed monoid is the ring of integers (composition becomes multiplication,
the transported addition stays addition).
"""

from __future__ import annotations

import random


def multiplier_apply(m: int, b: int) -> int:
    return m * b


def sample_at_one(m: int) -> int:
    """r(h) = h(1) for the multiplier endomorphism."""
    return multiplier_apply(m, 1)


def bounded_generated_closure(steps: int) -> set[int]:
    """Everything writable as a sum of at most steps+1 copies of 1.

    Supports the non-generator caveat for the monoid reduct: 0 and -1 never
    appear, so 1 generates only the positive integers under addition.
    """
    reachable = {1}
    for _ in range(steps):
        reachable |= {a + 1 for a in reachable}
    return reachable


def integers_check(samples: int = 1000, seed: int = 0,
                   max_multiplier: int = 100, closure_steps: int = 50) -> dict:
    rng = random.Random(seed)
    findings: dict = {"seed": seed, "samples": samples}

    # extension after sampling is the identity on multipliers: the sampled
    # value already determines the whole map
    eps_r_ok = all(
        multiplier_apply(sample_at_one(m), b) == multiplier_apply(m, b)
        for m in range(-max_multiplier, max_multiplier + 1)
        for b in (rng.randint(-10**6, 10**6) for _ in range(4))
    )
    findings["extension_after_sampling_identity"] = eps_r_ok

    # sampling after extension is the identity on integers
    r_eps_ok = all(
        sample_at_one(a) == a
        for a in (rng.randint(-10**9, 10**9) for _ in range(samples))
    )
    findings["sampling_after_extension_identity"] = r_eps_ok

    # endowed monoid, symbolically: composition of multipliers multiplies,
    # the transported sum adds; check the ring laws on sampled triples
    ring_ok = True
    for _ in range(samples):
        a, b, c = (rng.randint(-10**4, 10**4) for _ in range(3))
        compose = lambda m, n: m * n
        image_sum = lambda m, n: m + n
        if compose(compose(a, b), c) != compose(a, compose(b, c)):
            ring_ok = False
        if compose(a, image_sum(b, c)) != image_sum(compose(a, b), compose(a, c)):
            ring_ok = False
        if compose(1, a) != a or image_sum(0, a) != a:
            ring_ok = False
        if compose(a, b) != compose(b, a):
            ring_ok = False
    findings["ring_laws"] = ring_ok

    closure_ok = all(
        bounded_generated_closure(k) == set(range(1, k + 2))
        for k in range(closure_steps + 1)
    )
    final = bounded_generated_closure(closure_steps)
    findings["bounded_closure_exact"] = closure_ok
    findings["zero_unreachable"] = 0 not in final and -1 not in final

    findings["status"] = "pass" if all(
        findings[k] for k in ("extension_after_sampling_identity",
                              "sampling_after_extension_identity",
                              "ring_laws", "bounded_closure_exact",
                              "zero_unreachable")
    ) else "fail"
    return findings
