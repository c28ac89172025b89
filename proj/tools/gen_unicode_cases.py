#!/usr/bin/env python3
"""Regenerates tests/unicode_cases.inc: frozen normalization fixtures.

Each row is {input, nfkc(input), lowercase(nfkc(input))} where lowercase is
the simple per-code-point mapping used by the library (dotted capital I
folds to plain i).
"""

import random
import sys
import unicodedata


def simple_lower(s):
    out = []
    for ch in s:
        lo = ch.lower()
        if len(lo) == 1:
            out.append(lo)
        elif ch == "İ":
            out.append("i")
        else:
            out.append(ch)
    return "".join(out)


def fixed_cases():
    return [
        "",
        "merhaba",
        "ISPARTA",
        "İstanbul",
        "DİYARBAKIR",
        "açık ÖĞRETİM kuşu",
        "ç ğ ö ü ş İ",  # decomposed Turkish letters
        "ﬁnal ﬂaş ﬀort",
        "Ⅷ ① ㎞ ％ ²³ ℕ ℡",
        "ＦＵＬＬＷＩＤＴＨ ｔｅｘｔ",
        "ǅungla Ǆ ǋ",
        "한국어 처리",
        "한국",  # Jamo -> syllables
        "ελληνικά ΕΛΛΗΝΙΚΆ",
        "á̖ á̖",  # combining reorder, both orders
        "q̣̇ q̣̇",
        "Ωμέγα Ω",  # Ohm sign folds to omega
        "İİİ III ııı",
        "ṩ ṩ ṩ",
        "tab\tve\nsatır",
        "ﬃﬄﬅ ﬆop",
        "Ａ́Ｂ",
        "Å Å Å",  # Angstrom variants
    ]


def fuzz_cases(rng, count):
    starters = (
        list(range(0x0041, 0x007B))
        + list(range(0x00C0, 0x0180))
        + [0x0130, 0x0131, 0x015E, 0x015F, 0x011E, 0x011F]
        + list(range(0x0391, 0x03C9))
        + list(range(0x0410, 0x0450))
        + list(range(0xAC00, 0xAC20))
        + list(range(0x1100, 0x1113))
        + list(range(0x1161, 0x1176))
        + [0x2460, 0x2461, 0x33A1, 0xFB01, 0xFF21, 0xFF41, 0x1E9B]
    )
    marks = [0x0300, 0x0301, 0x0306, 0x0307, 0x0308, 0x030A, 0x0316, 0x0323, 0x0327, 0x0331]
    cases = []
    for _ in range(count):
        n = rng.randrange(1, 12)
        chars = []
        for _ in range(n):
            if chars and rng.random() < 0.4:
                chars.append(chr(rng.choice(marks)))
            else:
                chars.append(chr(rng.choice(starters)))
        cases.append("".join(chars))
    return cases


def c_literal(s):
    data = s.encode("utf-8")
    parts = []
    for b in data:
        if b in (0x22, 0x5C):
            parts.append("\\" + chr(b))
        elif 0x20 <= b < 0x7F:
            parts.append(chr(b))
        else:
            parts.append(f"\\{b:03o}")
    return '"' + "".join(parts) + '"'


def main():
    path = sys.argv[1] if len(sys.argv) > 1 else "tests/unicode_cases.inc"
    rng = random.Random(20240811)
    cases = fixed_cases() + fuzz_cases(rng, 400)
    with open(path, "w", encoding="utf-8") as out:
        out.write("// Generated by tools/gen_unicode_cases.py -- do not edit by hand.\n")
        out.write("// {input, nfkc, nfkc+lowercase} triples, UTF-8 bytes.\n")
        for s in cases:
            nk = unicodedata.normalize("NFKC", s)
            out.write(f"{{{c_literal(s)}, {c_literal(nk)}, {c_literal(simple_lower(nk))}}},\n")
    print(f"wrote {path}: {len(cases)} cases")


if __name__ == "__main__":
    main()
