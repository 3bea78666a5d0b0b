import logging

from fastapi import APIRouter
from fastapi.responses import JSONResponse

from app.services import bfs_lengths, distance_histogram, parse_window, sor_graph_trace
from app.utils import GeneratingSet

logger = logging.getLogger(__name__)

router = APIRouter()


@router.get("/sor")
async def get_sorting_trace(window: str, r: int):
    """
    Endpoint to replay the comb-graph sorting of a window step by step.
    """
    try:
        steps = sor_graph_trace(parse_window(window, r))
        return {
            "status": "success",
            "data": {"steps": [step.to_dict() for step in steps], "total": sum(step.distance for step in steps)},
        }
    except ValueError as e:
        return JSONResponse(status_code=400, content={"status": "error", "message": str(e)})
    except Exception as e:
        logger.error(f"ERROR: Failed to trace sorting: {str(e)}")
        return JSONResponse(status_code=500, content={"status": "error", "message": f"Failed to trace sorting: {str(e)}"})


@router.get("/bfs")
async def get_distance_histogram(genset: str, r: int, n: int):
    """
    Endpoint to count the elements at each Cayley-graph distance from the identity.
    """
    try:
        genset_values = [g.value for g in GeneratingSet]
        if genset not in genset_values:
            return JSONResponse(status_code=400, content={
                "status": "error",
                "message": f"Invalid genset parameter. Must be one of: {genset_values}"
            })
        histogram = distance_histogram(bfs_lengths(GeneratingSet(genset), r, n))
        return {"status": "success", "data": {str(k): int(v) for k, v in histogram.items()}}
    except ValueError as e:
        return JSONResponse(status_code=400, content={"status": "error", "message": str(e)})
    except Exception as e:
        logger.error(f"ERROR: Failed to explore Cayley graph: {str(e)}")
        return JSONResponse(status_code=500, content={"status": "error", "message": f"Failed to explore Cayley graph: {str(e)}"})
