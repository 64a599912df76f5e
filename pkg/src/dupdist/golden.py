"""Golden regression values: the exact binary distance maxima for n <= 32.

BINARY_MAX_DISTANCE[n] is the known maximum, over all binary strings of
length at most n, of the duplication distance to the root.  The table is the
fixed reference the ``table --check-table1`` regression compares against; a
mismatch at any n means the distance engine disagrees with the established
values and must be treated as an engine bug until proven otherwise.
"""

from __future__ import annotations

BINARY_MAX_DISTANCE: dict[int, int] = {
    1: 0, 2: 1, 3: 2, 4: 2, 5: 3, 6: 4, 7: 5, 8: 5,
    9: 6, 10: 6, 11: 7, 12: 7, 13: 8, 14: 8, 15: 8, 16: 9,
    17: 9, 18: 9, 19: 9, 20: 10, 21: 10, 22: 10, 23: 10, 24: 11,
    25: 11, 26: 11, 27: 11, 28: 12, 29: 12, 30: 12, 31: 12, 32: 13,
}
