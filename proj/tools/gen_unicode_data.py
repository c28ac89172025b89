#!/usr/bin/env python3
"""Regenerates src/unicode_data.cpp from Python's unicodedata tables.

Emits four tables: fully expanded compatibility decompositions (NFKD),
canonical combining classes, primary canonical composition pairs, and
single-code-point lowercase mappings. Hangul syllables are handled
algorithmically at runtime and excluded here.
"""

import sys
import unicodedata

HANGUL_FIRST, HANGUL_LAST = 0xAC00, 0xD7A3
SURROGATE_FIRST, SURROGATE_LAST = 0xD800, 0xDFFF


def code_points():
    for cp in range(0x110000):
        if HANGUL_FIRST <= cp <= HANGUL_LAST:
            continue
        if SURROGATE_FIRST <= cp <= SURROGATE_LAST:
            continue
        yield cp


def build_tables():
    nfkd = []      # (cp, [expansion cps])
    ccc = []       # (cp, class)
    lower = []     # (cp, lower cp)
    compose = []   # (starter, combining, composed)

    for cp in code_points():
        c = chr(cp)
        d = unicodedata.normalize("NFKD", c)
        if d != c:
            nfkd.append((cp, [ord(x) for x in d]))
        k = unicodedata.combining(c)
        if k:
            ccc.append((cp, k))
        lo = c.lower()
        if lo != c:
            if len(lo) == 1:
                lower.append((cp, ord(lo)))
            elif cp == 0x0130:
                # Dotted capital I: simple one-to-one fold to plain i.
                lower.append((cp, ord("i")))
            else:
                raise SystemExit(f"unexpected multi-char lowercase for U+{cp:04X}")
        dec = unicodedata.decomposition(c)
        if dec and not dec.startswith("<"):
            parts = [int(p, 16) for p in dec.split()]
            if len(parts) == 2:
                a, b = parts
                # Primary composite iff NFC recombines the pair.
                if unicodedata.normalize("NFC", chr(a) + chr(b)) == c:
                    compose.append((a, b, cp))

    compose.sort(key=lambda t: (t[0], t[1]))
    return nfkd, ccc, lower, compose


def emit(out, nfkd, ccc, lower, compose):
    w = out.write
    w("// Generated by tools/gen_unicode_data.py -- do not edit by hand.\n")
    w(f"// Source: Python unicodedata, UCD {unicodedata.unidata_version}.\n\n")
    w('#include "unicode_data.hpp"\n\n')
    w("namespace morpheval::unidata {\n\n")

    pool = []
    keys = []
    offsets = []
    for cp, exp in nfkd:
        keys.append(cp)
        offsets.append(len(pool))
        pool.extend(exp)
    offsets.append(len(pool))

    def dump(name, ctype, values, per_line=12):
        w(f"const {ctype} {name}[] = {{\n")
        for i in range(0, len(values), per_line):
            chunk = ",".join(str(v) for v in values[i : i + per_line])
            w(f"  {chunk},\n")
        w("};\n")

    dump("kNfkdKey", "char32_t", keys)
    dump("kNfkdOffset", "std::uint32_t", offsets)
    dump("kNfkdPool", "char32_t", pool)
    w(f"const std::size_t kNfkdCount = {len(keys)};\n\n")

    dump("kCccKey", "char32_t", [cp for cp, _ in ccc])
    dump("kCccValue", "std::uint8_t", [k for _, k in ccc])
    w(f"const std::size_t kCccCount = {len(ccc)};\n\n")

    dump("kLowerKey", "char32_t", [cp for cp, _ in lower])
    dump("kLowerValue", "char32_t", [lo for _, lo in lower])
    w(f"const std::size_t kLowerCount = {len(lower)};\n\n")

    dump("kComposeFirst", "char32_t", [a for a, _, _ in compose])
    dump("kComposeSecond", "char32_t", [b for _, b, _ in compose])
    dump("kComposeResult", "char32_t", [r for _, _, r in compose])
    w(f"const std::size_t kComposeCount = {len(compose)};\n\n")

    w("} // namespace morpheval::unidata\n")


def main():
    path = sys.argv[1] if len(sys.argv) > 1 else "src/unicode_data.cpp"
    tables = build_tables()
    with open(path, "w", encoding="utf-8") as out:
        emit(out, *tables)
    nfkd, ccc, lower, compose = tables
    print(
        f"wrote {path}: {len(nfkd)} decompositions, {len(ccc)} combining classes, "
        f"{len(lower)} lowercase maps, {len(compose)} composition pairs"
    )


if __name__ == "__main__":
    main()
