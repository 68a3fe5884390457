"""Pure-numpy reference implementations of the hot kernels.

These are the semantics the compiled extension must match. They are used
whenever the extension is unavailable (or EXACT_BACKEND=python), so they
favour clarity and vectorized numpy over micro-optimization. The exact
optimal-transport solver is the slowest of the three on large instances;
the compiled backend is strongly recommended for full-size scoring runs.
"""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..errors import MassError

BACKEND_NAME = "python"

BORDER_REFLECT = 0
BORDER_ZERO = 1

_PAD_MODE = {BORDER_REFLECT: "symmetric", BORDER_ZERO: "constant"}


def separable_correlate(grid: np.ndarray, kernel: np.ndarray, border: int) -> np.ndarray:
    """Correlate a 2D grid with a 1D kernel along rows, then columns.

    The kernel length must be odd; the output has the input's shape.
    Border handling is half-sample symmetric reflection or zero padding.
    """
    grid = np.ascontiguousarray(grid, dtype=np.float64)
    kernel = np.ascontiguousarray(kernel, dtype=np.float64)
    radius = kernel.shape[0] // 2
    if kernel.shape[0] % 2 != 1:
        raise ValueError("kernel length must be odd")
    if radius == 0:
        return grid * kernel[0]
    mode = _PAD_MODE[border]
    out = grid
    for axis in (1, 0):
        pad = [(0, 0), (0, 0)]
        pad[axis] = (radius, radius)
        padded = np.pad(out, pad, mode=mode)
        windows = sliding_window_view(padded, kernel.shape[0], axis=axis)
        out = windows @ kernel
    return out


def label_components(mask: np.ndarray) -> tuple[np.ndarray, int]:
    """4-connected component labelling of a binary mask.

    Returns (labels, count) with background 0 and components numbered from 1
    in order of first row-major appearance.
    """
    mask = np.asarray(mask, dtype=bool)
    height, width = mask.shape
    labels = np.zeros((height, width), dtype=np.int32)

    parent: list[int] = []

    def find(a: int) -> int:
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:  # path compression
            parent[a], a = root, parent[a]
        return root

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    # Run-based first pass: provisional ids per horizontal run, merged with
    # 4-connected runs of the previous row.
    all_runs: list[tuple[int, int, int, int]] = []  # (row, start, end, pid)
    prev_runs: list[tuple[int, int, int]] = []  # (start, end, pid)
    for row in range(height):
        line = mask[row]
        bounded = np.empty(width + 2, dtype=np.int8)
        bounded[0] = bounded[-1] = 0
        bounded[1:-1] = line
        diff = np.diff(bounded)
        starts = np.flatnonzero(diff == 1)
        ends = np.flatnonzero(diff == -1)
        cur_runs = []
        for start, end in zip(starts, ends):
            pid = len(parent)
            parent.append(pid)
            for pstart, pend, ppid in prev_runs:
                if pstart < end and start < pend:
                    union(pid, ppid)
            cur_runs.append((int(start), int(end), pid))
            all_runs.append((row, int(start), int(end), pid))
        prev_runs = cur_runs

    remap: dict[int, int] = {}
    for row, start, end, pid in all_runs:
        root = find(pid)
        label = remap.setdefault(root, len(remap) + 1)
        labels[row, start:end] = label
    return labels, len(remap)


def network_simplex(
    supply: np.ndarray, demand: np.ndarray, cost: np.ndarray
) -> tuple[float, np.ndarray, np.ndarray, np.ndarray]:
    """Exact solution of the dense transportation problem.

    Minimizes sum(cost[i, j] * flow[i, j]) subject to row sums equal to
    ``supply`` and column sums equal to ``demand`` (total masses must agree
    to 1e-9). Returns (total_cost, src_idx, sink_idx, amount) listing the
    strictly positive flows of an optimal basic solution.

    Transportation simplex on the spanning-tree basis: northwest-corner
    start, Dantzig pricing, with a switch to Bland's rule after a long
    degenerate stall so termination is guaranteed.
    """
    supply = np.ascontiguousarray(supply, dtype=np.float64)
    demand = np.ascontiguousarray(demand, dtype=np.float64)
    cost = np.ascontiguousarray(cost, dtype=np.float64)
    n, m = cost.shape
    if supply.shape != (n,) or demand.shape != (m,):
        raise ValueError("supply/demand shapes do not match the cost matrix")
    if np.any(supply < 0) or np.any(demand < 0):
        raise MassError("negative mass")
    total_s = float(supply.sum())
    total_d = float(demand.sum())
    if abs(total_s - total_d) > 1e-9 * max(1.0, total_s, total_d):
        raise MassError(f"mass mismatch: supply {total_s} vs demand {total_d}")

    # Basis: flows keyed by (i, j); tree adjacency over nodes 0..n-1 (sources)
    # and n..n+m-1 (sinks).
    flows: dict[tuple[int, int], float] = {}
    adj: list[set[int]] = [set() for _ in range(n + m)]

    def add_arc(i: int, j: int, value: float) -> None:
        flows[(i, j)] = value
        adj[i].add(n + j)
        adj[n + j].add(i)

    def drop_arc(i: int, j: int) -> None:
        del flows[(i, j)]
        adj[i].discard(n + j)
        adj[n + j].discard(i)

    # Northwest-corner initial basic solution: exactly n + m - 1 arcs.
    s_rem = supply.copy()
    d_rem = demand.copy()
    i = j = 0
    while True:
        move = min(s_rem[i], d_rem[j])
        add_arc(i, j, float(move))
        s_rem[i] -= move
        d_rem[j] -= move
        if i == n - 1 and j == m - 1:
            break
        if (s_rem[i] <= d_rem[j] and i < n - 1) or j == m - 1:
            i += 1
        else:
            j += 1

    tol = 1e-11 * max(1.0, float(np.abs(cost).max()) if cost.size else 1.0)
    max_iters = 1000 * (n + m) + 10000
    degenerate_streak = 0
    u = np.empty(n)
    v = np.empty(m)

    for _ in range(max_iters):
        # Node potentials from the tree: u[i] + v[j] = cost[i, j] on basis arcs.
        u.fill(np.nan)
        v.fill(np.nan)
        u[0] = 0.0
        stack = [0]
        while stack:
            node = stack.pop()
            for nb in adj[node]:
                if node < n:
                    if np.isnan(v[nb - n]):
                        v[nb - n] = cost[node, nb - n] - u[node]
                        stack.append(nb)
                else:
                    if np.isnan(u[nb]):
                        u[nb] = cost[nb, node - n] - v[node - n]
                        stack.append(nb)

        reduced = cost - u[:, None] - v[None, :]
        if degenerate_streak <= n + m:
            flat = int(np.argmin(reduced))
            ei, ej = divmod(flat, m)
            if reduced[ei, ej] >= -tol:
                break
        else:
            # Bland's rule: first negative arc in row-major order.
            neg = np.flatnonzero(reduced.ravel() < -tol)
            if neg.size == 0:
                break
            ei, ej = divmod(int(neg[0]), m)

        # Unique tree path from source ei to sink ej closes the cycle.
        parent_node = {ei: -1}
        queue = [ei]
        target = n + ej
        while queue and target not in parent_node:
            nxt = []
            for node in queue:
                for nb in adj[node]:
                    if nb not in parent_node:
                        parent_node[nb] = node
                        nxt.append(nb)
            queue = nxt
        path = [target]
        while path[-1] != ei:
            path.append(parent_node[path[-1]])
        path.reverse()  # ei ... n+ej, alternating source/sink

        # Stepping-stone cycle: the entering cell takes +theta and signs
        # alternate around the cycle, so source->sink hops of the walk
        # ei -> n+ej take -theta and sink->source hops take +theta.
        cells: list[tuple[int, int, int]] = []  # (i, j, delta_sign)
        for a, b in zip(path, path[1:]):
            if a < n:
                cells.append((a, b - n, -1))
            else:
                cells.append((b, a - n, +1))
        minus = [(ci, cj) for ci, cj, sign in cells if sign < 0]
        theta = min(flows[cell] for cell in minus)
        leaving = min(cell for cell in minus if flows[cell] <= theta)

        for ci, cj, sign in cells:
            flows[(ci, cj)] += sign * theta
        drop_arc(*leaving)
        add_arc(ei, ej, theta)
        degenerate_streak = degenerate_streak + 1 if theta <= 0.0 else 0
    else:
        raise RuntimeError("network simplex failed to converge")

    src, snk, amt = [], [], []
    for (fi, fj) in sorted(flows):
        value = flows[(fi, fj)]
        if value > 0.0:
            src.append(fi)
            snk.append(fj)
            amt.append(value)
    src_arr = np.asarray(src, dtype=np.int64)
    snk_arr = np.asarray(snk, dtype=np.int64)
    amt_arr = np.asarray(amt, dtype=np.float64)
    total = float(np.dot(cost[src_arr, snk_arr], amt_arr)) if amt else 0.0
    return total, src_arr, snk_arr, amt_arr
