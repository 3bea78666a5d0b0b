import logging

from fastapi import APIRouter
from fastapi.responses import JSONResponse

from app.services import describe, parse_window

logger = logging.getLogger(__name__)

router = APIRouter()


@router.get("")
async def get_statistics(window: str, r: int):
    """
    Endpoint to compute every statistic of one colored permutation.
    Even signed permutations (r=2) also carry their type-D statistics.
    """
    try:
        pi = parse_window(window, r)
        return {"status": "success", "data": describe(pi)}
    except ValueError as e:
        return JSONResponse(status_code=400, content={"status": "error", "message": str(e)})
    except Exception as e:
        logger.error(f"ERROR: Failed to compute statistics: {str(e)}")
        return JSONResponse(status_code=500, content={"status": "error", "message": f"Failed to compute statistics: {str(e)}"})
