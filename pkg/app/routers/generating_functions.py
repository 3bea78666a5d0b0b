import logging
from typing import Optional

from fastapi import APIRouter
from fastapi.responses import JSONResponse

from app.services import family_gf, parse_bound

logger = logging.getLogger(__name__)

router = APIRouter()


@router.get("/{family}")
async def get_generating_function(family: str, r: int, n: int, ferrers: Optional[str] = None,
                                  enumerative: Optional[str] = None):
    """
    Endpoint to build a closed-form generating function, or its enumerative side with enumerative=sor|length.
    """
    try:
        bound = parse_bound(ferrers) if ferrers else None
        polynomial = family_gf(family, r, n, bound, enumerative)
        return {
            "status": "success",
            "data": {"family": family, "text": polynomial.to_text(), "terms": polynomial.to_json()},
        }
    except ValueError as e:
        return JSONResponse(status_code=400, content={"status": "error", "message": str(e)})
    except Exception as e:
        logger.error(f"ERROR: Failed to build generating function: {str(e)}")
        return JSONResponse(status_code=500, content={"status": "error", "message": f"Failed to build generating function: {str(e)}"})
