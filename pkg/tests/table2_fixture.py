"""Synthetic AWS dataset whose OLS fit reproduces the four published rank rows.

Only (actual, predicted) pairs of the top four criteria are known, not the
underlying secondary/main weights. We pick a coefficient vector and
(aws2, aws3) for the top rows so that they predict exactly the published
values, then add filler criteria whose residuals cancel the top residuals'
projections on the design columns. OLS on the union then returns the chosen
coefficients, and with them the published predictions. Filler actual
weights are kept below the fourth-ranked weight so the ranking holds.

Run as a script to regenerate ``data/aws_table2.csv``.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

# (label, actual, predicted, main-criteria weight)
PUBLISHED = [
    ("LR3", 0.1329, 0.0591, 0.30),
    ("LR2", 0.0944, 0.0573, 0.30),
    ("CSR1", 0.0450, 0.0555, 0.26),
    ("IR4", 0.0426, 0.0537, 0.24),
]
PUBLISHED_DIFFERENCES = (0.0738, 0.0371, -0.0105, -0.0111)
PUBLISHED_COMMENTS = (
    "heavily underpredicted",
    "significantly underpredicted",
    "slightly overpredicted",
    "slightly overpredicted",
)

BETA = np.array([0.004, 0.09, 0.10])
FILLER = [
    ("LR1", 0.28, 0.30), ("LR4", 0.27, 0.28), ("CSR2", 0.29, 0.26), ("LR5", 0.26, 0.30),
    ("IR1", 0.28, 0.24), ("CSR3", 0.30, 0.28), ("CFR1", 0.18, 0.10), ("IR2", 0.15, 0.14),
    ("CSR4", 0.12, 0.20), ("CFR2", 0.10, 0.10), ("IR3", 0.08, 0.14), ("CFR3", 0.20, 0.06),
    ("CFR4", 0.05, 0.10), ("IR5", 0.14, 0.06), ("CSR5", 0.06, 0.20), ("CFR5", 0.03, 0.14),
]
ACTUAL_BOUNDS = (0.005, 0.041)

DATA_PATH = Path(__file__).parent / "data" / "aws_table2.csv"


def build_rows(decimals: int = 4) -> list[tuple[str, float, float, float]]:
    """Return ``(label, aws1, aws2, aws3)`` rows, rounded to ``decimals``."""
    from scipy.optimize import minimize

    top = []
    for label, actual, predicted, aws3 in PUBLISHED:
        aws2 = round((predicted - BETA[0] - BETA[2] * aws3) / BETA[1], decimals)
        top.append((label, actual, aws2, aws3))
    X_top = np.array([[1.0, a2, a3] for _, _, a2, a3 in top])
    e_top = np.array([a for _, a, _, _ in top]) - X_top @ BETA

    X_fill = np.array([[1.0, a2, a3] for _, a2, a3 in FILLER])
    pred_fill = X_fill @ BETA
    rhs = -X_top.T @ e_top
    lo, hi = ACTUAL_BOUNDS
    res = minimize(
        lambda e: e @ e,
        np.zeros(len(FILLER)),
        jac=lambda e: 2 * e,
        method="SLSQP",
        constraints=[{"type": "eq", "fun": lambda e: X_fill.T @ e - rhs, "jac": lambda e: X_fill.T}],
        bounds=[(lo - p, hi - p) for p in pred_fill],
        options={"ftol": 1e-15, "maxiter": 1000},
    )
    if not res.success:
        raise RuntimeError(f"fixture construction failed: {res.message}")
    actual_fill = np.round(pred_fill + res.x, decimals)
    rows = list(top)
    rows += [(label, float(a1), a2, a3) for (label, a2, a3), a1 in zip(FILLER, actual_fill)]
    return rows


def to_csv(rows) -> str:
    lines = ["label,aws1,aws2,aws3"]
    lines += [f"{lab},{a1:.4f},{a2:.4f},{a3:.4f}" for lab, a1, a2, a3 in rows]
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    DATA_PATH.write_text(to_csv(build_rows()))
    print(f"wrote {DATA_PATH}")
