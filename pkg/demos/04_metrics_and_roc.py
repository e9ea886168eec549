"""Tour of the evaluation measures and the ROC curve.

Starts from a hand-filled confusion table, prints every measure including the
cost-weighted family at several false-positive weights, then sweeps a score
list into a ROC curve.
"""

from sievekit import (ConfusionCounts, Label, metrics_report, metrics_table,
                      roc_curve)

# 100 legitimate messages (10 misfiled as spam), 100 spam (5 slipped through)
counts = ConfusionCounts(n_ll=90, n_ls=10, n_sl=5, n_ss=95)
report = metrics_report(counts, lambdas=(1, 9, 999))
print(metrics_table(report))

print("reading the weighted block: at lambda=9 one false positive costs as much")
print("as nine false negatives; TCR > 1 means filtering beats not filtering.\n")

# ROC: sweep the decision threshold over a score list
scores = [3.2, 2.8, 2.7, 1.1, 0.4, -0.2, -0.3, -0.9, -1.5, -2.0]
truths = [Label.SPAM] * 5 + [Label.LEGITIMATE] * 5
truths[3], truths[6] = Label.LEGITIMATE, Label.SPAM  # two ranking mistakes

curve = roc_curve(scores, truths)
print("threshold   fp_rate   tp_rate")
for threshold, fp, tp in curve.points:
    print(f"{threshold:>9.2f} {fp:>9.2f} {tp:>9.2f}")
print(f"\nAUC = {curve.auc:.3f} (1.0 would be a perfect ranking)")
