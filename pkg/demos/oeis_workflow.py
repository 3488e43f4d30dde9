"""
Cross-checking against OEIS b-files
===================================

``fetch_bfile`` looks in the cache, then in the vendored fixtures, then on
the network.  This script runs fully offline by serving a b-file we write
ourselves, which shows the moving parts without a connection.
"""

import tempfile
from pathlib import Path

from rwlabel.identities import a233449_terms
from rwlabel.oeis import compare_sequence, cross_validate, fetch_bfile, format_bfile

cache = Path(tempfile.mkdtemp())

##############################################################################
# Put a b-file in the cache and read it back.
text = format_bfile("A233449", list(enumerate(a233449_terms(25))))
(cache / "b233449.txt").write_text(text)
record = fetch_bfile("A233449", offline=True, cache_dir=cache)
print(record.source, len(record.terms), "terms, offset", record.offset)

##############################################################################
# Compare against our generator, then against a deliberately shifted one.
record, report, alignment = cross_validate("A233449", record=record)
print("agree:", report.agree, "over", report.compared, "terms using", alignment)
shifted = compare_sequence(record, a233449_terms(25)[1:], offset=0)
print("shifted agree:", shifted.agree, "first mismatch:", shifted.first_mismatch)

##############################################################################
# With network access, the same call downloads and caches the real file:
#     rwlabel oeis A233449
