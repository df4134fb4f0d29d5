import random

from trigroup.core import apply_generator


def random_quadruples(count, seed=0, max_scale=5, max_steps=10):
    """Deterministic corpus of valid quadruples: scaled roots pushed around
    by random generator words."""
    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        x = rng.randint(1, max_scale)
        root = [x, x, x, x]
        root[rng.randrange(4)] = 0
        q = tuple(root)
        for _ in range(rng.randint(0, max_steps)):
            q = apply_generator(q, rng.randint(1, 4))
        corpus.append(q)
    return corpus
