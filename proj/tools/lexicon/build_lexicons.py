#!/usr/bin/env python3
"""Regenerates the shipped lexicon files from raw WordNet 3.0 database files.

Outputs (into --out):
  pos_lexicon.tsv   word<TAB>VERB|NOUN|ADJ|OTHER for frequent English surface forms
  verbs.txt         verb lemmas, plus "form<TAB>lemma" lines for irregular forms
  deverbal.tsv      verb<TAB>noun,noun,... from derivationally related form links

The vocabulary is restricted to the --top most frequent English words as
reported by the `wordfreq` package so the files stay small.

Usage:
  build_lexicons.py --wordnet /path/to/wordnet-3.0 --out data/ [--top 60000]
"""

import argparse
import collections
import os
import re

import wordfreq

POS_FILES = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}
SS_TYPE = {"1": "n", "2": "v", "3": "a", "4": "r", "5": "a"}

DETACH = {
    "n": [("s", ""), ("ses", "s"), ("xes", "x"), ("zes", "z"), ("ches", "ch"),
          ("shes", "sh"), ("men", "man"), ("ies", "y")],
    "v": [("s", ""), ("ies", "y"), ("es", "e"), ("es", ""), ("ed", "e"),
          ("ed", ""), ("ing", "e"), ("ing", "")],
    "a": [("er", ""), ("est", ""), ("er", "e"), ("est", "e")],
    "r": [],
}

WORD_RE = re.compile(r"^[a-z][a-z'-]*$")


def read_index(wn_dir, pos):
    lemmas = set()
    with open(os.path.join(wn_dir, "index." + POS_FILES[pos]), encoding="latin-1") as f:
        for line in f:
            if line.startswith("  "):
                continue
            lemmas.add(line.split(" ", 1)[0])
    return lemmas


def read_exceptions(wn_dir, pos):
    exc = collections.defaultdict(list)
    with open(os.path.join(wn_dir, POS_FILES[pos] + ".exc"), encoding="latin-1") as f:
        for line in f:
            parts = line.split()
            exc[parts[0]].extend(parts[1:])
    return exc


def read_tag_counts(wn_dir):
    counts = collections.Counter()
    with open(os.path.join(wn_dir, "cntlist.rev"), encoding="latin-1") as f:
        for line in f:
            key, _, cnt = line.split()
            lemma, rest = key.split("%", 1)
            counts[(lemma, SS_TYPE[rest[0]])] += int(cnt)
    return counts


def morphy(word, pos, index, exc):
    out = set()
    if word in index[pos]:
        out.add(word)
    for base in exc[pos].get(word, []):
        if base in index[pos]:
            out.add(base)
    for suffix, repl in DETACH[pos]:
        if word.endswith(suffix) and len(word) > len(suffix) + 1:
            stem = word[: len(word) - len(suffix)] + repl
            if stem in index[pos]:
                out.add(stem)
            # stopped -> stop, running -> run
            if pos == "v" and repl == "" and len(stem) > 2 and stem[-1] == stem[-2]:
                if stem[:-1] in index[pos]:
                    out.add(stem[:-1])
    return out


def read_synset_words(wn_dir, pos):
    words = {}
    with open(os.path.join(wn_dir, "data." + POS_FILES[pos]), encoding="latin-1") as f:
        for line in f:
            if line.startswith("  "):
                continue
            fields = line.split()
            w_cnt = int(fields[3], 16)
            words[fields[0]] = [fields[4 + 2 * i].lower() for i in range(w_cnt)]
    return words


def read_derivations(wn_dir, noun_words):
    deriv = collections.defaultdict(set)
    with open(os.path.join(wn_dir, "data.verb"), encoding="latin-1") as f:
        for line in f:
            if line.startswith("  "):
                continue
            fields = line.split()
            w_cnt = int(fields[3], 16)
            verbs = [fields[4 + 2 * i].lower() for i in range(w_cnt)]
            i = 4 + 2 * w_cnt
            p_cnt = int(fields[i])
            i += 1
            for _ in range(p_cnt):
                symbol, offset, pos, st = fields[i:i + 4]
                i += 4
                if symbol != "+" or pos != "n":
                    continue
                src, dst = int(st[:2], 16), int(st[2:], 16)
                if src == 0 or dst == 0:
                    continue
                deriv[verbs[src - 1]].add(noun_words[offset][dst - 1])
    return deriv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--wordnet", required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--top", type=int, default=60000)
    ap.add_argument("--stopwords", default=None,
                    help="stopword file; listed words are tagged OTHER")
    args = ap.parse_args()

    stop = set()
    stop_path = args.stopwords or os.path.join(args.out, "stopwords.txt")
    if os.path.exists(stop_path):
        with open(stop_path) as f:
            stop = {l.strip() for l in f if l.strip()}

    index = {p: read_index(args.wordnet, p) for p in POS_FILES}
    exc = {p: read_exceptions(args.wordnet, p) for p in POS_FILES}
    tags = read_tag_counts(args.wordnet)

    top = [w for w in wordfreq.top_n_list("en", args.top) if WORD_RE.match(w)]
    top_set = set(top)

    coarse = {"n": "NOUN", "v": "VERB", "a": "ADJ", "r": "OTHER"}
    pos_lex = {}
    verb_lemmas = set()
    for word in top:
        if word in stop:
            pos_lex[word] = "OTHER"
            continue
        best, best_score = None, 0.0
        for pos in ("n", "v", "a", "r"):
            lemmas = morphy(word, pos, index, exc)
            if not lemmas:
                continue
            score = sum(tags[(l, pos)] for l in lemmas) + 0.5
            if score > best_score:
                best, best_score = pos, score
            if pos == "v":
                verb_lemmas.update(l for l in lemmas if WORD_RE.match(l))
        if best is not None:
            pos_lex[word] = coarse[best]

    with open(os.path.join(args.out, "pos_lexicon.tsv"), "w") as f:
        for word in sorted(pos_lex):
            f.write(f"{word}\t{pos_lex[word]}\n")

    irregular = []
    for form, bases in exc["v"].items():
        if form in top_set and WORD_RE.match(form):
            for base in bases:
                if base in verb_lemmas:
                    irregular.append((form, base))
                    break
    with open(os.path.join(args.out, "verbs.txt"), "w") as f:
        for lemma in sorted(verb_lemmas):
            f.write(lemma + "\n")
        for form, base in sorted(irregular):
            f.write(f"{form}\t{base}\n")

    noun_words = read_synset_words(args.wordnet, "n")
    deriv = read_derivations(args.wordnet, noun_words)
    with open(os.path.join(args.out, "deverbal.tsv"), "w") as f:
        for verb in sorted(verb_lemmas):
            nouns = sorted(n for n in deriv.get(verb, ()) if n in top_set and WORD_RE.match(n))
            if nouns:
                f.write(f"{verb}\t{','.join(nouns)}\n")


if __name__ == "__main__":
    main()
