"""Flow-kernel backend selection.

The compiled Cython kernel is preferred when it imported successfully;
``SEPKIT_BACKEND=pure`` (or ``compiled``) overrides. Both kernels
implement the same deterministic contract, so the choice never affects
results, only speed.
"""

from __future__ import annotations

import os

from . import _flowpure

_compiled = None
try:  # pragma: no cover - depends on build environment
    from . import _flowcore as _compiled  # type: ignore

    if not hasattr(_compiled, "solve"):
        _compiled = None
except ImportError:
    _compiled = None

_choice = os.environ.get("SEPKIT_BACKEND", "auto").lower()
if _choice == "pure":
    kernel = _flowpure
elif _choice == "compiled":
    if _compiled is None:
        raise ImportError("SEPKIT_BACKEND=compiled but sepkit._flowcore is not built")
    kernel = _compiled
else:
    kernel = _compiled if _compiled is not None else _flowpure


def backend_name() -> str:
    return "compiled" if kernel is _compiled and _compiled is not None else "pure"


def available_backends() -> dict[str, object]:
    out = {"pure": _flowpure}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out
