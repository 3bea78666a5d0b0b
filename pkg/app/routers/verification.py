import logging
from typing import Optional

from fastapi import APIRouter
from fastapi.responses import JSONResponse

from app.services import check, check_all, parse_bound

logger = logging.getLogger(__name__)

router = APIRouter()


@router.get("/{theorem}")
async def verify_theorem(theorem: str, r: int, n: int, ferrers: Optional[str] = None, all_ferrers: bool = False):
    """
    Endpoint to check one claim (or every claim with theorem=all) exhaustively.
    """
    try:
        bound = parse_bound(ferrers) if ferrers else None
        if theorem == "all":
            reports = check_all(r, n, bound, all_ferrers)
            return {"status": "success", "data": [report.to_dict() for report in reports]}
        report = check(theorem, r, n, bound, all_ferrers)
        return {"status": "success", "data": report.to_dict()}
    except ValueError as e:
        return JSONResponse(status_code=400, content={"status": "error", "message": str(e)})
    except Exception as e:
        logger.error(f"ERROR: Failed to verify {theorem}: {str(e)}")
        return JSONResponse(status_code=500, content={"status": "error", "message": f"Failed to verify: {str(e)}"})
