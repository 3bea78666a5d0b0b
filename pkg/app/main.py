import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.core.config import configure_logging, settings
from app.routers import codes_router, enumeration_router, gf_router, oracles_router, stats_router, verification_router

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    configure_logging()
    logger.info("Starting up: ")

    # List all endpoints
    for route in app.routes:
        logger.info(f"Endpoint: {getattr(route, 'path', None)} - Methods: {getattr(route, 'methods', None)}")
    yield

    logger.info("Shutting down: ")

app = FastAPI(title=f"{settings.APP_NAME} API", version="0.1.0", debug=settings.DEBUG, lifespan=lifespan)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include API routers
app.include_router(stats_router, prefix="/api/stats", tags=["Statistics"])
app.include_router(codes_router, prefix="/api/codes", tags=["Codes"])
app.include_router(enumeration_router, prefix="/api/enumerate", tags=["Enumeration"])
app.include_router(gf_router, prefix="/api/gf", tags=["Generating Functions"])
app.include_router(verification_router, prefix="/api/verify", tags=["Verification"])
app.include_router(oracles_router, prefix="/api/oracle", tags=["Oracles"])


@app.get("/")
async def root():
    return {"message": f"{settings.APP_NAME} API is running"}
