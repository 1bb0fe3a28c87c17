from fastapi import APIRouter, HTTPException, Query
from fastapi.responses import JSONResponse
from typing import Literal, Optional

from ..core.config import settings
from ..core.errors import RunCountError
from ..services import counts, export
from ..services.series import w_series
from ..services.verifier import run_verification

router = APIRouter(prefix="/runs", tags=["runs"])


def _check_size(name: str, value: int) -> None:
    if value > settings.API_MAX_N:
        raise HTTPException(
            status_code=400,
            detail=f"{name}={value} exceeds the service limit of {settings.API_MAX_N}",
        )


@router.get("/count")
def count_runs(
    n: int,
    r: int,
    k: int,
    scope: Literal["prefix0", "all"] = "prefix0",
    statistic: Literal["runs", "success-runs"] = "runs",
):
    """Count words of length n with exactly k runs of length r"""
    try:
        _check_size("n", n)
        _check_size("r", r)
        q = counts.make_triple(n, r, k)
        value = counts.RunCounter().count(q, scope=scope, statistic=statistic)

        return JSONResponse(content={
            "n": n,
            "r": r,
            "k": k,
            "scope": scope,
            "statistic": statistic,
            "count": str(value),
        })

    except HTTPException:
        raise
    except RunCountError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Error counting runs: {str(e)}")


@router.get("/pmf")
def run_count_distribution(
    n: int,
    r: int,
    k_min: Optional[int] = Query(None),
    k_max: Optional[int] = Query(None),
    success: bool = False,
):
    """Exact distribution of the number of runs of length r"""
    try:
        _check_size("n", n)
        _check_size("r", r)
        counter = counts.RunCounter()
        dist = counter.success_pmf(n, r) if success else counter.pmf(n, r)
        records = export.pmf_records(dist, k_min, k_max)

        return JSONResponse(content=[record.model_dump() for record in records])

    except HTTPException:
        raise
    except RunCountError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Error computing distribution: {str(e)}")


@router.get("/series")
def run_free_series(r: int, order: int):
    """Coefficients W(0,r) .. W(order,r)"""
    try:
        _check_size("r", r)
        _check_size("order", order)
        series = w_series(r, order)

        return JSONResponse(content={
            "r": r,
            "order": order,
            "coefficients": [str(c) for c in series.coeffs],
        })

    except HTTPException:
        raise
    except RunCountError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Error expanding series: {str(e)}")


@router.get("/verify")
def verify_formulas(n_max: int, r_max: Optional[int] = None):
    """Check the formulas against brute-force enumeration"""
    try:
        if n_max < 0:
            raise HTTPException(status_code=400, detail="n_max must be >= 0")
        report = run_verification(n_max, r_max)

        return JSONResponse(content={**report.model_dump(), "passed": report.passed})

    except HTTPException:
        raise
    except RunCountError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Error running verification: {str(e)}")
