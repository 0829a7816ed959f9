#!/usr/bin/env python3
"""Generate frozen stemmer fixtures from the reference Snowball binary.

The reference is the stem_oracle CLI (see tools/stem_oracle/), a thin
wrapper over the rust-stemmers crate, which is generated from the official
Snowball sources.  Fixtures are TSV lines "word<TAB>stem".

Usage:
    python3 tools/gen_stem_fixtures.py --oracle /path/to/stemoracle [--check]

--check additionally runs the in-tree stemmers over every word and prints
mismatches instead of writing fixtures (the development loop).
"""

from __future__ import annotations

import argparse
import random
import string
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

RU_ALPHABET = "абвгдежзийклмнопрстуфхцчшщъыьэюяё"
EN_ALPHABET = string.ascii_lowercase


def fuzz_words(alphabet: str, seed: int, count: int, extras: str = "") -> list[str]:
    rng = random.Random(seed)
    pool = alphabet + extras
    words = []
    for _ in range(count):
        n = rng.randint(1, 12)
        words.append("".join(rng.choice(pool) for _ in range(n)))
    return sorted(set(words))


def run_oracle(oracle: str, lang: str, words: list[str]) -> dict[str, str]:
    payload = "\n".join(words) + "\n"
    out = subprocess.run(
        [oracle, lang], input=payload, capture_output=True, text=True, check=True
    ).stdout
    stems = {}
    for line in out.splitlines():
        word, _, stemmed = line.partition("\t")
        stems[word] = stemmed
    missing = [w for w in words if w not in stems]
    if missing:
        raise SystemExit(f"oracle dropped {len(missing)} words, e.g. {missing[:5]}")
    return stems


def load_wordlist(name: str) -> list[str]:
    path = ROOT / "tools" / name
    words = [w.strip() for w in path.read_text(encoding="utf-8").splitlines()]
    return sorted(set(w for w in words if w))


def write_fixture(path: Path, stems: dict[str, str], words: list[str]) -> None:
    lines = [f"{w}\t{stems[w]}" for w in words]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {path} ({len(lines)} entries)")


def check(lang: str, stems: dict[str, str]) -> int:
    sys.path.insert(0, str(ROOT / "src"))
    from sosemnet import stemming

    bad = 0
    for word, expected in stems.items():
        got = stemming.stem(word, lang)
        if got != expected:
            bad += 1
            if bad <= 40:
                print(f"  {lang} MISMATCH {word!r}: oracle={expected!r} ours={got!r}")
    return bad


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--oracle", default="/tmp/stemoracle/target/release/stemoracle")
    ap.add_argument("--check", action="store_true")
    ap.add_argument("--fuzz", type=int, default=600, help="fuzz words per language")
    ap.add_argument("--fuzz-seed", type=int, default=20120313)
    args = ap.parse_args()

    jobs = [
        ("en", "wordlist_en.txt", EN_ALPHABET, "'y"),
        ("ru", "wordlist_ru.txt", RU_ALPHABET, ""),
    ]
    total_bad = 0
    for lang, listname, alphabet, extras in jobs:
        curated = load_wordlist(listname)
        fuzz = fuzz_words(alphabet, args.fuzz_seed, args.fuzz, extras)
        stems_curated = run_oracle(args.oracle, lang, curated)
        stems_fuzz = run_oracle(args.oracle, lang, fuzz)
        if args.check:
            bad = check(lang, stems_curated) + check(lang, stems_fuzz)
            print(f"{lang}: {len(curated)} curated + {len(fuzz)} fuzz, {bad} mismatches")
            total_bad += bad
        else:
            data = ROOT / "tests" / "data"
            write_fixture(data / f"stems_{lang}.tsv", stems_curated, curated)
            write_fixture(data / f"stems_{lang}_fuzz.tsv", stems_fuzz, fuzz)
    if args.check and total_bad:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
