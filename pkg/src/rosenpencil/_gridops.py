"""Internal block-grid plumbing for the pencil recursions.

A grid is a 2-D list of blocks plus block-size lists and a record of how
many leading block rows/cols belong to the state (A) side.  Each recursion
step is a splice: old blocks land at remapped positions, new rows/cols are
zero except for a handful of prescribed entries.
"""

from __future__ import annotations

__all__ = ["Grid", "splice"]


class Grid:
    __slots__ = ("cells", "rsz", "csz", "a_r", "a_c")

    def __init__(self, cells, rsz, csz, a_r, a_c):
        self.cells = cells  # list of lists of blocks (ndarray or MatrixPolynomial)
        self.rsz = list(rsz)
        self.csz = list(csz)
        self.a_r = a_r  # leading block rows belonging to the A side
        self.a_c = a_c

    @property
    def nrows(self):
        return len(self.rsz)

    @property
    def ncols(self):
        return len(self.csz)


def splice(prev: Grid, row_map, new_rsz, col_map, new_csz, extra, zero, a_r, a_c) -> Grid:
    """Remap ``prev`` into a larger grid.

    row_map/col_map give the new position of each old block row/col; cells
    not covered by the remap or by ``extra`` (a list of (row, col, block)
    entries) are zero blocks from the ``zero(rows, cols)`` factory.
    """
    nr, nc = len(new_rsz), len(new_csz)
    cells = [[None] * nc for _ in range(nr)]
    for k, nk in enumerate(row_map):
        old_row = prev.cells[k]
        for j, nj in enumerate(col_map):
            cells[nk][nj] = old_row[j]
    for rr, cc, val in extra:
        cells[rr][cc] = val
    for rr in range(nr):
        row = cells[rr]
        for cc in range(nc):
            if row[cc] is None:
                row[cc] = zero(new_rsz[rr], new_csz[cc])
    return Grid(cells, new_rsz, new_csz, a_r, a_c)
