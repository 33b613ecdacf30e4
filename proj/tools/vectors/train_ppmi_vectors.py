#!/usr/bin/env python3
"""Train small count-based word vectors (PPMI + truncated SVD) and write them
in word2vec text format.

Good enough for tests and smoke runs. For real evaluations train word2vec on
a large corpus and pass that file instead.

    python3 train_ppmi_vectors.py corpus.txt [more.txt ...] -o vectors.txt --dim 50
"""
import argparse
import re
from collections import Counter

import numpy as np

TOKEN = re.compile(r"[A-Za-z0-9]+(?:'[A-Za-z]+)?|[^\sA-Za-z0-9]")
SEPARATOR = "story_separator_special_tag"


def sentences(paths):
    for path in paths:
        with open(path, encoding="utf-8") as f:
            for line in f:
                line = line.replace("NEWLINE_CHAR", " ")
                for doc in line.split(SEPARATOR):
                    toks = [t.lower() for t in TOKEN.findall(doc)]
                    if toks:
                        yield toks


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("corpus", nargs="+")
    ap.add_argument("-o", "--output", required=True)
    ap.add_argument("--dim", type=int, default=50)
    ap.add_argument("--window", type=int, default=4)
    ap.add_argument("--min-count", type=int, default=1)
    args = ap.parse_args()

    docs = list(sentences(args.corpus))
    freq = Counter(t for d in docs for t in d)
    vocab = sorted(w for w, c in freq.items() if c >= args.min_count)
    index = {w: i for i, w in enumerate(vocab)}
    n = len(vocab)

    counts = np.zeros((n, n))
    for d in docs:
        ids = [index[t] for t in d if t in index]
        for i, a in enumerate(ids):
            for j in range(max(0, i - args.window), min(len(ids), i + args.window + 1)):
                if j != i:
                    counts[a, ids[j]] += 1.0 / abs(i - j)

    total = counts.sum()
    row = counts.sum(axis=1, keepdims=True)
    col = counts.sum(axis=0, keepdims=True)
    with np.errstate(divide="ignore", invalid="ignore"):
        pmi = np.log(counts * total / (row * col))
    ppmi = np.where(np.isfinite(pmi) & (pmi > 0), pmi, 0.0)

    u, s, _ = np.linalg.svd(ppmi, full_matrices=False)
    dim = min(args.dim, n)
    vecs = u[:, :dim] * np.sqrt(s[:dim])
    # fix SVD sign ambiguity so reruns give identical files
    for k in range(dim):
        if vecs[np.argmax(np.abs(vecs[:, k])), k] < 0:
            vecs[:, k] = -vecs[:, k]

    with open(args.output, "w", encoding="utf-8") as f:
        f.write(f"{n} {dim}\n")
        for w in vocab:
            f.write(w + " " + " ".join(f"{x:.6f}" for x in vecs[index[w]]) + "\n")


if __name__ == "__main__":
    main()
