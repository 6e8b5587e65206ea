# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Shared pytest fixtures and configuration for all tests."""

import logging
import os
import tempfile

import pytest

from glg.models.domain.ranked_digraph import RankedDigraph
from glg.tests.builders.ranked_digraph_builder import a_graph, an_orbit_graph
from glg.tests.factories.graph_suite_factory import GraphSuiteFactory

ORBIT_GLG = """\
# orbit subset graph of (1 2) on {1, 2, 3}
vertex a 3
vertex b 2
vertex c 1
vertex * 0
edge e1 a b
edge e2 a c
edge e3 b *
edge e4 c *
"""


@pytest.fixture(scope="session", autouse=True)
def configure_test_environment():
    """
    Configure environment for all tests.

    Runs once at the start of the test session.
    """
    os.environ["LOG_DIR"] = tempfile.gettempdir()
    os.environ["LOG_LEVEL"] = "WARNING"

    # Configure logging to reduce noise
    logging.basicConfig(
        level=logging.WARNING, format="%(levelname)s - %(name)s - %(message)s"
    )

    yield


@pytest.fixture
def orbit_graph() -> RankedDigraph:
    """The four-vertex orbit graph with lengths 1, 2, 2, 1."""
    return an_orbit_graph().build()


@pytest.fixture
def graph_builder():
    """Provide an empty RankedDigraph builder."""
    return a_graph()


@pytest.fixture
def suite_factory() -> GraphSuiteFactory:
    return GraphSuiteFactory()


@pytest.fixture
def temp_test_dir(tmp_path):
    """Provide a temporary directory for tests that need file I/O."""
    test_dir = tmp_path / "glg_test"
    test_dir.mkdir()
    return test_dir


@pytest.fixture
def orbit_file(temp_test_dir):
    """The orbit graph written to a .glg file."""
    path = temp_test_dir / "orbit.glg"
    path.write_text(ORBIT_GLG, encoding="utf-8")
    return path
