"""Rendering of verification results.

Machine-readable lines carry one claim per line as
"claim=<name> expected=<v> got=<v> status=<pass|fail|skipped>"; the text
renderer produces the same content for humans.  Output never depends on
worker count or locale.
"""

from __future__ import annotations

from .analysis import NonequivalenceRecord, VerificationReport

__all__ = [
    "report_lines",
    "report_text",
    "verify_all_line",
    "nonequivalence_line",
]


def _claim(name, expected, got) -> str:
    if got is None:
        return f"claim={name} expected={expected} got=- status=skipped"
    status = "pass" if expected == got else "fail"
    return f"claim={name} expected={expected} got={got} status={status}"


def report_lines(rep: VerificationReport) -> list:
    r, m = rep.order
    mode = "fast" if rep.fast else "audit"
    lines = [
        f"order=({r},{m}) budget={rep.budget} mode={mode}",
        _claim("length", rep.claimed.n, rep.computed_n),
        _claim("log2_size", rep.claimed.k, rep.computed_k),
        _claim("min_lee_distance", rep.claimed.d, rep.computed_d),
        _claim(
            "witness_isometry",
            rep.computed_d if rep.computed_d is not None else rep.claimed.d,
            rep.witness_hamming,
        ),
        f"image_linear={'true' if rep.image_linear else 'false'}",
    ]
    if rep.passed:
        result = "pass"
    elif rep.failures:
        result = "fail"
    else:
        result = "skipped"
    lines.append(f"result={result}")
    return lines


def report_text(rep: VerificationReport) -> str:
    r, m = rep.order
    rows = [f"LRM({r},{m})  {rep.label}"]
    d = "skipped: budget" if rep.computed_d is None else rep.computed_d
    wh = "skipped: budget" if rep.witness_hamming is None else rep.witness_hamming
    rows.append(f"  length         claimed {rep.claimed.n:<6} computed {rep.computed_n}")
    rows.append(f"  log2 size      claimed {rep.claimed.k:<6} computed {rep.computed_k}")
    rows.append(f"  min Lee dist   claimed {rep.claimed.d:<6} computed {d}")
    rows.append(f"  image weight of witness: {wh}")
    rows.append(f"  Gray image linear: {'yes' if rep.image_linear else 'no'}")
    rows.append(f"  verdict: {'PASS' if rep.passed else 'SKIPPED' if not rep.failures else 'FAIL'}")
    return "\n".join(rows)


def verify_all_line(rep: VerificationReport) -> str:
    r, m = rep.order
    d = "-" if rep.computed_d is None else rep.computed_d
    if rep.passed:
        status = "pass"
    elif rep.failures:
        status = "fail"
    else:
        status = "skipped"
    return (
        f"r={r} m={m} n={rep.computed_n}/{rep.claimed.n} "
        f"k={rep.computed_k}/{rep.claimed.k} d={d}/{rep.claimed.d} "
        f"image_linear={'true' if rep.image_linear else 'false'} status={status}"
    )


def nonequivalence_line(rec: NonequivalenceRecord) -> str:
    r, m = rec.order
    word = "distinct" if rec.distinct else "equal"
    return f"r={r} m={m} lrm_k={rec.lrm_k} qrm_k={rec.qrm_k} {word}"
