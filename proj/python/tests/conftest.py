import pytest

try:
    import sgbounds  # noqa: F401
except ImportError:
    # ctest maps this code to a skip when the extension is not installed.
    pytest.exit("sgbounds extension not installed; run pip install --no-build-isolation .", returncode=77)
