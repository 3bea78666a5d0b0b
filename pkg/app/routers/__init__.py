from app.routers.stats import router as stats_router
from app.routers.codes import router as codes_router
from app.routers.enumeration import router as enumeration_router
from app.routers.generating_functions import router as gf_router
from app.routers.verification import router as verification_router
from app.routers.oracles import router as oracles_router

__all__ = ["stats_router", "codes_router", "enumeration_router", "gf_router", "verification_router", "oracles_router"]
