import logging

from fastapi import APIRouter
from fastapi.responses import JSONResponse

from app.services import apply_bijection, encode, format_window, parse_window
from app.utils import Bijection, CodeKind

logger = logging.getLogger(__name__)

router = APIRouter()


@router.get("")
async def get_code(window: str, r: int, kind: str = CodeKind.B.value):
    """
    Endpoint to encode a colored permutation as its Lehmer, A-, B-, C- or D-code.
    """
    try:
        kind_values = [k.value for k in CodeKind]
        if kind not in kind_values:
            return JSONResponse(status_code=400, content={
                "status": "error",
                "message": f"Invalid kind parameter. Must be one of: {kind_values}"
            })
        code = encode(parse_window(window, r), kind)
        return {"status": "success", "data": {"text": str(code), **code.to_dict(kind)}}
    except ValueError as e:
        return JSONResponse(status_code=400, content={"status": "error", "message": str(e)})
    except Exception as e:
        logger.error(f"ERROR: Failed to compute code: {str(e)}")
        return JSONResponse(status_code=500, content={"status": "error", "message": f"Failed to compute code: {str(e)}"})


@router.get("/map")
async def get_image(window: str, r: int, bijection: str = Bijection.Phi.value):
    """
    Endpoint to apply phi (on G(r,n)) or psi (on D(n)) to a window.
    """
    try:
        bijection_values = [b.value for b in Bijection]
        if bijection not in bijection_values:
            return JSONResponse(status_code=400, content={
                "status": "error",
                "message": f"Invalid bijection parameter. Must be one of: {bijection_values}"
            })
        image = apply_bijection(parse_window(window, r), bijection)
        return {"status": "success", "data": {"bijection": bijection, "window": format_window(image)}}
    except ValueError as e:
        return JSONResponse(status_code=400, content={"status": "error", "message": str(e)})
    except Exception as e:
        logger.error(f"ERROR: Failed to apply {bijection}: {str(e)}")
        return JSONResponse(status_code=500, content={"status": "error", "message": f"Failed to apply bijection: {str(e)}"})
