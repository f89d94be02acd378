"""Config model."""

from typing import List, Literal, Optional

import pytz
from pydantic import BaseModel, conint, validator

Algo = Literal["bwf", "fwf", "diag"]
FamilyName = Literal["e1", "e2", "e3", "phi", "psi"]


class SearchConfig(BaseModel):
    """Proof search config data model."""

    algo: Algo = "bwf"
    timeout_seconds: conint(gt=0) = 60  # type: ignore
    use_filter: bool = True
    oracle_budget: conint(gt=0) = 200_000  # type: ignore


class FamilyConfig(BaseModel):
    """Benchmark family config data model."""

    name: FamilyName
    n: List[conint(ge=0)] = [0]  # type: ignore


class RandomConfig(BaseModel):
    """Random corpus config data model."""

    size: conint(ge=1)  # type: ignore
    count: conint(ge=1)  # type: ignore
    num_vars: conint(ge=1) = 3  # type: ignore
    seed: int = 0


class BenchConfig(BaseModel):
    """Benchmark run config data model."""

    families: List[FamilyConfig] = []
    random: Optional[RandomConfig] = None
    algos: List[Algo] = ["bwf"]
    timeout_seconds: conint(gt=0) = 60  # type: ignore
    output: Optional[str] = None
    timezone: str = "Europe/Amsterdam"

    @validator("timezone")
    def known_timezone(cls, value: str) -> str:
        if value not in pytz.all_timezones_set:
            raise ValueError(f"unknown timezone '{value}'")
        return value


class ConfigModel(BaseModel):
    """Config data model."""

    bench: BenchConfig
    search: SearchConfig = SearchConfig()
