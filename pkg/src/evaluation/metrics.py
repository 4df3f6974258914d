""" Confusion counts, precision, recall and F1 with abnormal as the positive class.

    F1 = 2 · precision · recall / (precision + recall)

Zero denominators give 0 for precision, recall and F1, so every metric is
defined on any nonempty labeled set.

Example:
    >>> report = evaluate(predictions, labels)
    >>> report.precision, report.recall, report.f1
"""

from typing import Sequence

from src.errors import SewerDataError
from src.models.report import EvalReport
from src.models.verdict import Verdict


def f1_score(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def evaluate(
    predictions: Sequence[Verdict],
    labels: Sequence[Verdict],
    positive: Verdict = Verdict.ABNORMAL,
) -> EvalReport:
    if len(predictions) != len(labels):
        raise SewerDataError(
            f"predictions and labels differ in length: {len(predictions)} vs {len(labels)}"
        )
    if not labels:
        raise SewerDataError("cannot evaluate an empty set")

    tp = fp = fn = tn = 0
    for predicted, actual in zip(predictions, labels):
        if actual == positive:
            if predicted == positive:
                tp += 1
            else:
                fn += 1
        elif predicted == positive:
            fp += 1
        else:
            tn += 1

    precision = tp / (tp + fp) if tp + fp > 0 else 0.0
    recall = tp / (tp + fn) if tp + fn > 0 else 0.0
    return EvalReport(
        tp=tp,
        fp=fp,
        fn=fn,
        tn=tn,
        precision=precision,
        recall=recall,
        f1=f1_score(precision, recall),
        n_abnormal=tp + fn,
        n_normal=fp + tn,
    )


def flagged_indices(verdicts: Sequence[Verdict]) -> set[int]:
    return {i for i, v in enumerate(verdicts) if v.is_abnormal}
