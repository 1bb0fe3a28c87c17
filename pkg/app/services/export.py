import csv
import io
import json
from typing import List, Optional

from ..core.errors import InvalidParameterError
from ..schemas.runs import OutputRecord, Pmf

CSV_FIELDS = ["k", "count", "prob_num", "prob_den_exp", "prob_float"]


def pmf_records(pmf: Pmf, k_min: Optional[int] = None, k_max: Optional[int] = None) -> List[OutputRecord]:
    k_min = 0 if k_min is None else k_min
    k_max = pmf.k_max if k_max is None else k_max
    if not 0 <= k_min <= k_max <= pmf.k_max:
        raise InvalidParameterError(
            f"k range must satisfy 0 <= k_min <= k_max <= {pmf.k_max}, got {k_min}..{k_max}"
        )
    denom = 1 << pmf.denominator_exponent
    return [
        OutputRecord(
            k=k,
            count=str(pmf.numerators[k]),
            prob_num=str(pmf.numerators[k]),
            prob_den_exp=pmf.denominator_exponent,
            # correctly rounded; str() gives the shortest round-trip form
            prob_float=pmf.numerators[k] / denom,
        )
        for k in range(k_min, k_max + 1)
    ]


def to_csv(records: List[OutputRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow(record.model_dump())
    return buffer.getvalue()


def to_json(records: List[OutputRecord]) -> str:
    return json.dumps([record.model_dump() for record in records], indent=2) + "\n"
