import logging
from typing import Optional

from fastapi import APIRouter
from fastapi.responses import JSONResponse

from app.services import enumeration_table, members, parse_bound

logger = logging.getLogger(__name__)

router = APIRouter()


@router.get("")
async def get_enumeration(r: int, n: int, ferrers: Optional[str] = None, type_d: bool = False):
    """
    Endpoint to list G(r,n), D(n) or a Ferrers restriction of either, one row of statistics per element.
    """
    try:
        bound = parse_bound(ferrers) if ferrers else None
        table = enumeration_table(members(r, n, bound, type_d), type_d)
        return {"status": "success", "data": table.to_dict(orient="records")}
    except ValueError as e:
        return JSONResponse(status_code=400, content={"status": "error", "message": str(e)})
    except Exception as e:
        logger.error(f"ERROR: Failed to enumerate: {str(e)}")
        return JSONResponse(status_code=500, content={"status": "error", "message": f"Failed to enumerate: {str(e)}"})
