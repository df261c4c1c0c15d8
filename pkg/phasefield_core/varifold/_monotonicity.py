import csv


class MonotonicityTable:
    """
    Scaled energies r^{1−n}∫_{B_r(x₀)} e_ε at increasing radii.

    Attributes
    ----------
    rows : list of (tuple, float, float)
        (x₀, r, ratio) triples.
    c : float
        Smallest c with ratio(r) − ratio(s) ≥ −c·r over all measured pairs.
    c_full : float
        Same constant for the inequality with the discrepancy and radial terms.
    """

    def __init__(self, rows, c, c_full):
        self.rows = list(rows)
        self.c = float(c)
        self.c_full = float(c_full)

    @property
    def radii(self):
        return [r for _, r, _ in self.rows]

    @property
    def ratios(self):
        return [q for _, _, q in self.rows]

    def extend(self, other):
        """
        Merge another table; the fitted constants take the maximum.
        """
        return MonotonicityTable(
            self.rows + other.rows, max(self.c, other.c), max(self.c_full, other.c_full)
        )

    def to_dict(self):
        return {
            "c": self.c,
            "c_full": self.c_full,
            "rows": [{"x0": list(x0), "r": r, "ratio": q} for x0, r, q in self.rows],
        }

    def to_csv(self, filepath):
        """
        Write the columns x0, r, ratio; x0 coordinates are separated by spaces.
        """
        with open(filepath, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["x0", "r", "ratio"])
            for x0, r, q in self.rows:
                writer.writerow([" ".join(repr(v) for v in x0), repr(r), repr(q)])

    def __len__(self):
        return len(self.rows)
