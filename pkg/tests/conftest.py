"""Shared fixtures: paths to the bundled synthetic datasets."""

from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def annual_paths(data_dir):
    return {
        "equity": data_dir / "annual_equity.csv",
        "tbills": data_dir / "annual_tbills.csv",
        "tbonds": data_dir / "annual_tbonds.csv",
    }


@pytest.fixture(scope="session")
def daily_paths(data_dir):
    return {
        "prices": data_dir / "daily_prices.csv",
        "eps": data_dir / "quarterly_eps.csv",
        "yields": data_dir / "daily_yields.csv",
    }
