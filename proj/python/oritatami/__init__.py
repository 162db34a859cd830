from ._oritatami import (
    Configuration,
    FoldResult,
    OritatamiSystem,
    certify,
    curve_vertices,
    expand,
    fold,
    hex_distance,
    horizon_key,
    parse_os_file,
    emit_os_file,
    pigeonhole_threshold,
    render_svg,
)

__all__ = [
    "Configuration",
    "FoldResult",
    "OritatamiSystem",
    "certify",
    "curve_vertices",
    "expand",
    "fold",
    "hex_distance",
    "horizon_key",
    "parse_os_file",
    "emit_os_file",
    "pigeonhole_threshold",
    "render_svg",
]
