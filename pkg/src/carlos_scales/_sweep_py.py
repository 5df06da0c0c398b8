"""Pure-Python sweep kernel, used when the compiled extension is unavailable."""
import numpy as np


def sweep(steps, log2s, cents):
    """Closed-form unit and worst absolute deviation (cents) for each row.

    ``steps`` is an (n, m) integer array: one row of step counts per
    candidate, one column per target.
    """
    rows = np.asarray(steps, dtype=np.int64).tolist()
    log2s = [float(v) for v in log2s]
    cents = [float(v) for v in cents]
    if rows and len(rows[0]) != len(log2s) or len(log2s) != len(cents):
        raise ValueError("target arrays do not match the step matrix width")
    units = []
    devs = []
    for row in rows:
        num = 0.0
        den = 0
        for k, lg in zip(row, log2s):
            num += k * lg
            den += k * k
        x = num / den
        unit_cents = 1200.0 * x
        worst = 0.0
        for k, c in zip(row, cents):
            r = abs(k * unit_cents - c)
            if r > worst:
                worst = r
        units.append(x)
        devs.append(worst)
    return np.array(units, dtype=np.float64), np.array(devs, dtype=np.float64)
