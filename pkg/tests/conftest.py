import importlib
import sys

import pytest

from ifdist import _pykernels

try:
    _ckernels = importlib.import_module("ifdist._ckernels")
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="pure")]
BACKENDS.append(
    pytest.param(_ckernels, id="compiled")
    if _ckernels is not None
    else pytest.param(None, id="compiled", marks=pytest.mark.skip(reason="extension not built"))
)


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Route density and special functions through one kernel implementation."""
    from ifdist import density, specfun

    monkeypatch.setattr(density, "kernels", request.param)
    monkeypatch.setattr(specfun, "kernels", request.param)
    return request.param


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        terminalreporter.write_line(results[k])
