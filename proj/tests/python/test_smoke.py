import _oritatami as ori

GLIDER = """format-version 1
alphabet a A
delay 3
arity 4
rule a A
transcript cyclic A A A a a a
seed 0 0 a
seed 1 0 A
seed 0 1 a
seed 1 1 a
"""


def test_parse_and_fold():
    sys = ori.parse_os_file(GLIDER)
    assert sys.delay == 3
    assert sys.arity == 4
    res = ori.fold(sys, 60)
    assert res.kind == "step-limit"
    assert res.steps == 60
    path = res.config.path
    # period-6 translation beyond the seed
    v = (path[10][0] - path[4][0], path[10][1] - path[4][1])
    for i in range(4, len(path) - 6):
        assert (path[i + 6][0] - path[i][0], path[i + 6][1] - path[i][1]) == v


def test_roundtrip():
    sys = ori.parse_os_file(GLIDER)
    emitted = ori.emit_os_file(sys)
    again = ori.parse_os_file(emitted)
    assert ori.emit_os_file(again) == emitted


def test_expand_and_curves():
    assert ori.expand("koch", 1) == "F+F-F+F"
    assert ori.expand("minkowski", 1) == "F+F-F-FF+F+F-F"
    verts = ori.curve_vertices("koch", 2)
    assert len(verts) == 17
    assert verts[-1] == (9, 0)


def test_threshold_and_distance():
    assert ori.pigeonhole_threshold(1, 1, 4) == "626"
    assert ori.hex_distance((0, 0), (2, 2)) == 4


def test_svg():
    sys = ori.parse_os_file(GLIDER)
    res = ori.fold(sys, 12)
    svg = ori.render_svg(res.config)
    assert svg.startswith("<svg")
    assert svg.count("<circle") == len(res.config.path)
