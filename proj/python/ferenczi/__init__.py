from ._ferenczi import (
    FerencziError,
    Schedule,
    decode_centered,
    load_schedule,
    preset,
    preset_names,
    realize,
    __version__,
)

__all__ = [
    "FerencziError",
    "Schedule",
    "decode_centered",
    "load_schedule",
    "preset",
    "preset_names",
    "realize",
    "__version__",
]
