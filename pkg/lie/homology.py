"""Homology of graded operators with square zero."""
import logging
from typing import Callable, Dict, Hashable, List, Sequence

from base.elements import BasisWord, Element
from base.enums import CheckStatus
from base.errors import ConsistencyError
from base.linalg import image, in_span, kernel, operator_matrix
from base.operators import LinOp
from base.reports import TableReport

logger = logging.getLogger(__name__)

Grading = Callable[[BasisWord], Hashable]


def exterior_degree(word: BasisWord) -> int:
    return len(word.key[1])


def symmetric_degree(word: BasisWord) -> int:
    return sum(word.key[0])


def bigrading(word: BasisWord) -> tuple:
    return (symmetric_degree(word), exterior_degree(word))


def require_square_zero(op: LinOp, words: Sequence[BasisWord]) -> None:
    """Raise ConsistencyError with a witness if op o op does not vanish."""
    for word in words:
        value = op.apply(op.on_word(word))
        if not value.is_zero():
            raise ConsistencyError(
                f"{op.label} does not square to zero",
                {"witness": str(word), "value": value.serialize()},
            )


def homology(
    op: LinOp,
    words: Sequence[BasisWord],
    grading: Grading = exterior_degree,
    name: str = "homology",
) -> TableReport:
    """Dimension of ker/im of op in each grade.

    Args:
        op: Graded operator with op^2 = 0
        words: Basis of the complex (closed under op)
        grading: Grade of each basis word
        name: Report name

    Returns:
        TableReport: One row per grade with chain, rank and homology dimensions

    Raises:
        ConsistencyError: If op^2 != 0 or op does not shift the grading uniformly
    """
    words = list(words)
    require_square_zero(op, words)
    known = set(words)
    grades: Dict[Hashable, List[BasisWord]] = {}
    for word in words:
        grades.setdefault(grading(word), []).append(word)
    rank_out: Dict[Hashable, int] = {}
    rank_in: Dict[Hashable, int] = {g: 0 for g in grades}
    for grade, block in grades.items():
        images = [op.on_word(w) for w in block]
        targets = {grading(t) for image in images for t in image.words()}
        for image in images:
            for target in image.words():
                if target not in known:
                    raise ConsistencyError(f"{op.label} leaves the complex at {target}")
        if len(targets) > 1:
            raise ConsistencyError(f"{op.label} is not homogeneous for the grading at {grade}")
        if not targets:
            rank_out[grade] = 0
            continue
        matrix, _ = operator_matrix(op, block)
        rank_out[grade] = matrix.rank()
        target = targets.pop()
        rank_in[target] = rank_in.get(target, 0) + rank_out[grade]
    rows = []
    for grade in sorted(grades):
        size = len(grades[grade])
        rows.append({
            "grade": list(grade) if isinstance(grade, tuple) else grade,
            "chains": size,
            "rank_out": rank_out[grade],
            "rank_in": rank_in[grade],
            "homology": size - rank_out[grade] - rank_in[grade],
        })
    logger.debug(f"{name}: {[row['homology'] for row in rows]}")
    return TableReport(name=name, status=CheckStatus.PASS, rows=rows)


def homology_dimensions(report: TableReport) -> Dict[Hashable, int]:
    return {
        tuple(row["grade"]) if isinstance(row["grade"], list) else row["grade"]: row["homology"]
        for row in report.rows
    }


def cycles_modulo_boundaries(op: LinOp, words: Sequence[BasisWord]) -> List[Element]:
    """Representatives of homology classes on span(words)."""
    boundaries = image(op, words)
    reps: List[Element] = []
    for cycle in kernel([op], words):
        if not in_span(cycle, boundaries + reps):
            reps.append(cycle)
    return reps
