"""Cross-checks fixtures with independent Python tools.

Turtle/N-Triples twins are compared with rdflib; BibTeX golden files are
read back with bibtexparser.

    pip install rdflib bibtexparser
    python3 scripts/verify_fixtures.py
"""

import pathlib
import sys

import bibtexparser
import rdflib
import rdflib.compare
from bibtexparser.middlewares import SeparateCoAuthors, SplitNameParts

ROOT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def check_twins():
    ok = True
    for ttl in sorted((ROOT / "headers").glob("*.ttl")):
        a = rdflib.Graph().parse(ttl, format="turtle")
        b = rdflib.Graph().parse(ttl.with_suffix(".nt"), format="nt")
        bnodes = any(isinstance(t, rdflib.BNode) for tr in a for t in tr)
        same = rdflib.compare.isomorphic(a, b) if bnodes else set(a) == set(b)
        print(f"twin {ttl.stem}: {len(a)} triples, {'equal' if same else 'DIFFERENT'}")
        ok &= same
    return ok


def check_bibtex():
    ok = True
    for bib in sorted((ROOT / "bibtex").glob("*.bib")):
        lib = bibtexparser.parse_string(bib.read_text(), append_middleware=[SeparateCoAuthors(), SplitNameParts()])
        if lib.failed_blocks or len(lib.entries) != 1:
            print(f"bibtex {bib.name}: FAILED")
            ok = False
            continue
        e = lib.entries[0]
        names = ["; ".join(" ".join(p) for p in (n.last, n.first) if p) for n in e["author"]]
        print(f"bibtex {bib.name}: key={e.key} year={e['year']} authors={names}")
    return ok


if __name__ == "__main__":
    sys.exit(0 if check_twins() & check_bibtex() else 1)
