#!/usr/bin/env python3
"""Small journal corpus and auxiliary inputs used by the CLI and determinism tests."""

import csv
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent

JOURNALS = ["Acta Synth", "Chem Letters", "J Catalysis", "Polymer Rev", "Surface Sci"]


def write(path, header, rows):
    path.parent.mkdir(exist_ok=True)
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def corpus(rng):
    docs = []
    for j, journal in enumerate(JOURNALS):
        for year in range(2006, 2011):
            for k in range(2 + (j + year) % 4):
                doc_type = "review" if journal == "Polymer Rev" else "article"
                authors = ";".join(f"Author {rng.randint(1, 40)}" for _ in range(rng.randint(1, 4)))
                docs.append([f"{journal[:4].lower().replace(' ', '')}-{year}-{k}", journal, year,
                             doc_type, rng.randint(0, 300), authors])
    # A methods journal whose only item is an old superclassic.
    docs.append(["meth-1951-0", "Methods Bull", 1951, "article", 9000, "Author 41;Author 42"])
    edges = set()
    for citing in docs:
        if citing[2] < 2007:
            continue
        older = [d for d in docs if d[2] < citing[2]]
        for cited in rng.sample(older, min(len(older), rng.randint(1, 6))):
            edges.add((citing[0], cited[0]))
        if rng.random() < 0.6:
            edges.add((citing[0], "meth-1951-0"))
    write(HERE / "corpus" / "docs.csv", ["id", "venue", "year", "doc_type", "cites", "authors"],
          docs)
    write(HERE / "corpus" / "edges.csv", ["citing_id", "cited_id"], sorted(edges))


def geophysics():
    """Counts whose Bradford zones hold 9, 59 and 258 journals yielding 249, 499 and 404."""
    nucleus = [93, 36, 25, 22, 19, 17, 14, 12, 11]
    middle = [10] * 27 + [9] * 8 + [8] * 6 + [7] * 8 + [6] * 5 + [5] * 3 + [4] * 2
    tail = [2] * 146 + [1] * 112
    assert (len(nucleus), sum(nucleus)) == (9, 249)
    assert (len(middle), sum(middle)) == (59, 499), (len(middle), sum(middle))
    assert (len(tail), sum(tail)) == (258, 404)
    counts = nucleus + middle + tail
    write(HERE / "bradford_geophysics.csv", ["id", "count"],
          [[f"journal-{i + 1:03d}", c] for i, c in enumerate(counts)])


def main():
    rng = random.Random(1972)
    corpus(rng)
    geophysics()
    write(HERE / "cycle5.csv", ["citing_id", "cited_id"],
          [[f"n{i}", f"n{(i + 1) % 5}"] for i in range(5)])
    write(HERE / "journal_matrix.csv", ["journal", *JOURNALS, "pubs"],
          [[a, *[rng.randint(0, 60) + (40 if a == b else 5) for b in JOURNALS],
            rng.randint(10, 120)] for a in JOURNALS])
    write(HERE / "symmetric2.csv", ["journal", "A", "B", "pubs"],
          [["A", 0, 7, 20], ["B", 7, 0, 20]])
    write(HERE / "pairs.csv", ["x", "y"],
          [[round(x, 3), round(0.7 * x + rng.gauss(0, 1), 3)]
           for x in (rng.gauss(3, 1) for _ in range(30))])
    top = [[f"J{i:03d}", int(1000 / (i + 1)) + rng.randint(0, 5)] for i in range(60)]
    write(HERE / "counts_a.csv", ["id", "count"], top)
    shuffled = [[j, max(1, c + rng.randint(-20, 20))] for j, c in top]
    write(HERE / "counts_b.csv", ["id", "count"], shuffled)


if __name__ == "__main__":
    main()
