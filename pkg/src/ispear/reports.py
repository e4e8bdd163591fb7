"""Plain-text and CSV renderings of the analysis and evaluation results."""
from __future__ import annotations

import csv
import math

from ispear.ml.metrics import pct

DISPLAY_NAMES = {
    "amplitude_mean": "Amplitude",
    "duration_samples": "Duration",
    "duration_s": "Duration (s)",
    "db1": "Db1",
    "db2": "Db2",
    "db3": "Db3",
    "db4": "Db4",
}


def _g(x, digits=6):
    if x is None:
        return "nan"
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.{digits}g}"


def analysis_text(results, random_group, summaries, summary_response, alpha=0.05) -> str:
    lines = [
        "Linear mixed model: full vs null model comparison (ML likelihood-ratio tests)",
        f"full model: response ~ emotion + (1 | {random_group})",
        "",
        f"{'Response variable':<18}{'drop emotion: chi2':>20}{'df':>4}{'p-value':>13}"
        f"{'drop (1|' + random_group + '): chi2':>26}{'df':>4}{'p-value':>13}  sig",
    ]
    for r in results:
        sig = "*" if r.fixed_test.p_value <= alpha else ""
        lines.append(
            f"{DISPLAY_NAMES.get(r.response, r.response):<18}"
            f"{_g(r.fixed_test.statistic):>20}{r.fixed_test.df:>4}{_g(r.fixed_test.p_value, 4):>13}"
            f"{_g(r.random_test.statistic):>26}{r.random_test.df:>4}{_g(r.random_test.p_value, 4):>13}  {sig}"
        )
    lines += ["", f"* emotion effect significant at alpha = {alpha}", "", "Full-model fixed effects (estimate +/- SE):"]
    for r in results:
        terms = ", ".join(
            f"{name} = {_g(b)} +/- {_g(se, 4)}" for name, b, se in zip(r.full.beta_names, r.full.beta, r.full.beta_se)
        )
        lines.append(f"  {DISPLAY_NAMES.get(r.response, r.response)}: {terms}; "
                     f"sigma_e = {_g(r.full.sigma_e)}, sigma_b = {_g(r.full.sigma_b)}")
    lines += ["", f"{DISPLAY_NAMES.get(summary_response, summary_response)} by {random_group}:"]
    for s in summaries:
        lines.append(f"  {s.label:<10} n = {s.n:<6} mean = {_g(s.mean)}  sd = {_g(s.sd)}  se = {_g(s.se)}")
    return "\n".join(lines) + "\n"


def write_lrt_csv(results, path, which) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("response", "statistic", "df", "p_value"))
        for r in results:
            t = r.fixed_test if which == "fixed" else r.random_test
            w.writerow((r.response, _g(t.statistic, 9), t.df, _g(t.p_value, 9)))


def write_fixed_effects_csv(results, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("response", "term", "estimate", "se"))
        for r in results:
            for name, b, se in zip(r.full.beta_names, r.full.beta, r.full.beta_se):
                w.writerow((r.response, name, _g(float(b), 9), _g(float(se), 9)))


def write_group_summary_csv(summaries, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("group", "n", "mean", "sd", "se"))
        for s in summaries:
            w.writerow((s.label, s.n, _g(s.mean, 9), _g(s.sd, 9), _g(s.se, 9)))


def evaluation_text(reports) -> str:
    """Side-by-side confusion tables; rows are actual classes, columns predictions."""
    titles = {"svm": "SVM", "sigmoid": "Neural Network"}
    lines = ["Classification results (stratified cross-validation, pooled over folds)", ""]
    for rep in reports:
        c = rep.pooled.counts
        m = rep.metrics
        ne, em = m["non_emotional"], m["emotional"]
        params = ", ".join(f"{k}={v}" for k, v in rep.params.items())
        lines += [
            f"{titles.get(rep.classifier, rep.classifier)}  ({rep.k}-fold, seed {rep.seed}; {params})",
            f"{'Output':<16}{'Non-emotional':>15}{'Emotional':>12}",
            f"{'Non-emotional':<16}{c[0, 0]:>15}{c[0, 1]:>12}",
            f"{'Emotional':<16}{c[1, 0]:>15}{c[1, 1]:>12}",
            f"{'Precision':<16}{pct(ne.table_precision):>15}{pct(em.table_precision):>12}",
            f"{'Recall':<16}{pct(ne.table_recall):>15}{pct(em.table_recall):>12}",
            f"{'Accuracy':<16}{pct(m.accuracy):>15}",
            f"{'Mean fold acc.':<16}{pct(rep.mean_fold_accuracy, 2):>15}",
            "standard convention (precision = TP / predicted, recall = TP / actual):",
            f"{'  precision':<16}{pct(ne.precision):>15}{pct(em.precision):>12}",
            f"{'  recall':<16}{pct(ne.recall):>15}{pct(em.recall):>12}",
        ]
        if rep.fold_errors:
            lines.append(f"failed folds: {', '.join(str(f) for f, _ in rep.fold_errors)}")
        lines.append("")
    return "\n".join(lines)


def write_eval_csv(report, path) -> None:
    """Per-class rows use the published table's precision/recall arithmetic."""
    m = report.metrics
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("class", "tp_row", "fp_row", "precision", "recall"))
        for c in m.classes:
            w.writerow((c.name, c.tp_row, c.fp_row, _g(c.table_precision, 9), _g(c.table_recall, 9)))
        w.writerow(("accuracy", _g(m.accuracy, 9)))
