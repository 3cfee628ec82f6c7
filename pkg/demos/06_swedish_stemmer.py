#!/usr/bin/env python3
"""A tour of the Swedish Snowball stemmer.

Shows the three suffix-stripping steps, the R1 region rule that protects
short stems, and why the toolkit's corpus stemmer iterates the single pass
to a fixed point.
"""

from genderprobe import stem_swedish, stem_swedish_once

print("=" * 70)
print("1. Inflection families collapse to one stem")
print("=" * 70)
for family in [
    ["klok", "kloka", "klokare", "klokast", "klokhet", "klokheterna"],
    ["hund", "hunden", "hundar", "hundarna", "hundarnas"],
    ["jaktkarl", "jaktkarlar", "jaktkarlarne", "jaktkarlens"],
]:
    stems = {stem_swedish_once(word) for word in family}
    print(f"  {', '.join(family)}")
    print(f"    -> {stems}")

print()
print("=" * 70)
print("2. The R1 region protects short words")
print("=" * 70)
for word in ["yx", "en", "bo", "klokt", "friskt"]:
    print(f"  {word:8s} -> {stem_swedish_once(word):8s}"
          + ("  (unchanged: suffix not inside R1)"
             if stem_swedish_once(word) == word else ""))

print()
print("=" * 70)
print("3. Single pass vs fixed point")
print("=" * 70)
print("The published algorithm runs once and is not idempotent: stripping an")
print("inflection can expose another strippable ending.")
for word in ["advokaten", "kamraterna", "automaterna"]:
    first = stem_swedish_once(word)
    second = stem_swedish_once(first)
    print(f"  {word:14s} -> {first:10s} -> {second:10s}   "
          f"fixpoint: {stem_swedish(word)}")
print()
print("Corpus stemming uses stem_swedish (the fixed-point form), so stemmed")
print("corpora contain only tokens the stemmer maps to themselves.")
