"""
Demo API Router

Closed-form fixture reports for MAX, integration, ODE and eigenvectors.
"""
from typing import List

from fastapi import APIRouter, HTTPException, status

from ..schemas.demo import DemoReport
from ..services.demos import DEMO_NAMES, run_demo

router = APIRouter()


@router.get("", response_model=List[str])
def list_demos():
    """Names accepted by GET /demo/{name}"""
    return list(DEMO_NAMES)


@router.get("/{name}", response_model=DemoReport)
def get_demo(name: str):
    """Run one demo and return its report"""
    if name not in DEMO_NAMES:
        raise HTTPException(
            status_code=status.HTTP_404_NOT_FOUND,
            detail=f"Unknown demo {name!r}"
        )
    return run_demo(name)
