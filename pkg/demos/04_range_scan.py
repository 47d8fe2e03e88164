"""
Scanning a range of parameters
==============================

Every admissible m in the range is certified and tested; only
m = -4, -2, -1, 1 survive the obstruction.
"""

from collections import Counter

from simplest_sextic import scan_range

records = list(scan_range(-40, 40, samples=20))
print(Counter(r.verdict or r.skipped_reason for r in records))
print([r.m for r in records if r.verdict == "obstruction-inconclusive"])
print(records[0].to_json())
