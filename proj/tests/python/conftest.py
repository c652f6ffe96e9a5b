import os
import sys


def pytest_configure(config):
    build_dir = os.environ.get("MONOIDLAB_PYTHON_DIR")
    if build_dir and build_dir not in sys.path:
        sys.path.insert(0, build_dir)
