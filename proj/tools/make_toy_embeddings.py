#!/usr/bin/env python3
"""Writes data/embeddings_toy50.txt, a small deterministic word2vec text file."""
import argparse
import numpy as np

DIM = 50

POSITIVE = ["buy", "get", "find", "receive", "take", "collect", "pick", "gain", "win", "earn"]
NEGATIVE = ["eat", "give", "lose", "sell", "spend", "donate", "throw", "use", "break", "lend"]

# word -> (partner, weight on partner)
NEAR = {
    "devour": ("eat", 0.9),
    "consume": ("eat", 0.85),
    "purchase": ("buy", 0.9),
    "acquire": ("gain", 0.85),
    "grab": ("take", 0.85),
    "discard": ("throw", 0.85),
    "misplace": ("lose", 0.85),
    "borrow": ("lend", 0.6),
}

OTHER = ["have", "apple", "orange", "marble", "cookie", "pencil", "sticker", "pear"]


def unit(v):
    return v / np.linalg.norm(v)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out")
    ap.add_argument("--seed", type=int, default=20170523)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    pos_dir = unit(rng.standard_normal(DIM))
    neg_dir = unit(rng.standard_normal(DIM))
    verb_dir = unit(rng.standard_normal(DIM))

    vecs = {}
    for w in POSITIVE:
        vecs[w] = unit(verb_dir + 0.9 * pos_dir + 0.55 * rng.standard_normal(DIM) / np.sqrt(DIM) * 4)
    for w in NEGATIVE:
        vecs[w] = unit(verb_dir + 0.9 * neg_dir + 0.55 * rng.standard_normal(DIM) / np.sqrt(DIM) * 4)
    # antonym pairs share context
    for a, b in [("buy", "sell"), ("give", "take"), ("win", "lose"), ("find", "lose")]:
        shared = rng.standard_normal(DIM) / np.sqrt(DIM)
        vecs[a] = unit(vecs[a] + 0.3 * shared)
        vecs[b] = unit(vecs[b] + 0.3 * shared)
    for w, (partner, weight) in NEAR.items():
        noise = unit(rng.standard_normal(DIM))
        vecs[w] = unit(weight * vecs[partner] + (1 - weight) * noise)
    for w in OTHER:
        vecs[w] = unit(rng.standard_normal(DIM))

    with open(args.out, "w") as f:
        f.write(f"{len(vecs)} {DIM}\n")
        for w in sorted(vecs):
            f.write(w + " " + " ".join(f"{x:.6f}" for x in vecs[w]) + "\n")


if __name__ == "__main__":
    main()
