"""
Test configuration and fixtures
"""

from typing import AsyncGenerator

import pytest
import pytest_asyncio
from httpx import ASGITransport, AsyncClient

from app.main import app
from app.models.curve import CurveContext
from app.schemas.polygon import PolygonPayload
from app.services.arithmetic import make_context
from app.services.polygon import polygon_from_vertices


@pytest.fixture
def ctx_g2() -> CurveContext:
    """p = 2 on a genus 2 curve"""
    return make_context(2, 2)


@pytest.fixture
def ctx_g3() -> CurveContext:
    return make_context(3, 3)


@pytest.fixture
def make_polygon():
    """Build a canonical polygon from a vertex list"""
    return polygon_from_vertices


@pytest.fixture
def polygon_file(tmp_path):
    """Write a polygon to a JSON file and return its path"""
    counter = {"n": 0}

    def write(vertices) -> str:
        polygon = polygon_from_vertices(vertices)
        counter["n"] += 1
        path = tmp_path / f"polygon_{counter['n']}.json"
        path.write_text(PolygonPayload.from_polygon(polygon).model_dump_json(), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def clean_env(monkeypatch):
    """Remove FROBSTRAT_* overrides so defaults apply"""
    import os

    for key in list(os.environ):
        if key.startswith("FROBSTRAT_"):
            monkeypatch.delenv(key, raising=False)
    return monkeypatch


@pytest_asyncio.fixture
async def client() -> AsyncGenerator[AsyncClient, None]:
    """Create a test client."""
    transport = ASGITransport(app=app)
    async with AsyncClient(transport=transport, base_url="http://test") as test_client:
        yield test_client


