"""Shared test helpers."""


def random_words(group, rng, count, length=8):
    """Sample group elements as random words in the three generators."""
    gens = group.generators()
    out = []
    for _ in range(count):
        g = group.identity
        for _ in range(length):
            g = group.mul(g, rng.choice(gens))
        out.append(g)
    return out
