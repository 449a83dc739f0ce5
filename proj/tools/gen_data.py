#!/usr/bin/env python3
"""Regenerate data/unigrams.tsv and data/emoji.tsv.

Requires the `wordsegment` and `emoji` Python packages. The outputs are
committed; this script only documents where they came from.
"""
import argparse
import os
import unicodedata

import emoji
import wordsegment

# Descriptions the shipped table pins to a friendlier rendering than the
# upstream CLDR short name.
OVERRIDES = {
    "☺": "smiley face",
    "☺\ufe0f": "smiley face",
}


def write_unigrams(path, limit):
    src = os.path.join(os.path.dirname(wordsegment.__file__), "unigrams.txt")
    rows = []
    with open(src, encoding="utf-8") as f:
        for line in f:
            word, count = line.split("\t")
            rows.append((word, int(count)))
    rows.sort(key=lambda r: (-r[1], r[0]))
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for word, count in (rows[:limit] if limit else rows):
            out.write(f"{word}\t{count}\n")


def describe(name):
    name = name.strip(":").replace("_", " ").replace("\u2019", "'").lower()
    name = unicodedata.normalize("NFKD", name)
    name = "".join(c for c in name if not unicodedata.combining(c))
    return " ".join(name.encode("ascii", "ignore").decode().split())


def write_emoji(path):
    rows = {}
    for seq, data in emoji.EMOJI_DATA.items():
        if "en" not in data:
            continue
        rows[seq] = describe(data["en"])
    rows.update(OVERRIDES)
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for seq in sorted(rows):
            hexseq = " ".join(f"{ord(c):04X}" for c in seq)
            out.write(f"{hexseq}\t{rows[seq]}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    ap.add_argument("--unigram-limit", type=int, default=0, help="0 keeps every word")
    args = ap.parse_args()
    write_unigrams(os.path.join(args.out_dir, "unigrams.tsv"), args.unigram_limit)
    write_emoji(os.path.join(args.out_dir, "emoji.tsv"))


if __name__ == "__main__":
    main()
