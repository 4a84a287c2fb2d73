import os
import sys

# Under ctest the freshly built module takes precedence over an installed one.
_build = os.environ.get("CRSYM_PYTHON_BUILD")
if _build:
    sys.meta_path[:] = [f for f in sys.meta_path if "editable" not in type(f).__module__]
    sys.path.insert(0, _build)
    for name in [m for m in sys.modules if m == "crsym" or m.startswith("crsym.")]:
        del sys.modules[name]
