import pytest

import ivd


def build(points, bound=ivd.COORD_BOUND):
    e = ivd.Engine(bound)
    e.insert_many(points)
    return e


def test_first_site_counts():
    e = ivd.Engine()
    st = e.insert(10, 20)
    assert st["n"] == 1 and st["links"] == 1 and st["cuts"] == 0
    # three sentinels plus one site
    assert e.vertex_count() == 3 and e.edge_count() == 3
    assert len(e) == 1


def test_matches_oracle_and_counts():
    pts = ivd.generate("uniform-disc", 300, 4)
    e = ivd.Engine()
    for x, y in pts:
        e.insert(x, y)
    n = len(pts) + 3
    assert e.vertex_count() == 2 * n - 5
    assert e.edge_count() == 3 * n - 9
    assert e.check_oracle() == ""
    assert e.check_invariants() == ""


def test_stats_fields():
    rows = build(ivd.generate("clustered", 100, 2)).insert_many([(5, 5)])
    assert set(rows[0]) == set(ivd.STATS_HEADER.split(","))


def test_cocyclic_rejected_without_change():
    e = build([(0, 0), (6, 0), (0, 8)])
    before = e.export_text(include_sentinels=True)
    with pytest.raises(ivd.DegeneracyError):
        e.insert(6, 8)
    assert e.export_text(include_sentinels=True) == before
    assert len(e) == 3


def test_input_errors():
    e = build([(1, 1)])
    with pytest.raises(ivd.DuplicateSiteError):
        e.insert(1, 1)
    with pytest.raises(ivd.InputError):
        e.insert(ivd.COORD_BOUND + 1, 0)
    with pytest.raises(ivd.InputError, match="line 2"):
        ivd.parse_points("1 2\nfoo\n")
    with pytest.raises(ivd.InputError):
        ivd.parse_points("# nothing\n")
    assert ivd.parse_points("1 2 # a\n-3 4\n") == [(1, 2), (-3, 4)]


def test_export_roundtrip():
    e = build(ivd.generate("uniform-square", 200, 9))
    text = e.export_text()
    assert text.startswith("ivd-diagram 1\n")
    r = ivd.import_text(text)
    assert r.vertices() == e.vertices()
    assert r.neighbor_pairs() == e.neighbor_pairs()
    assert r.export_text() == text
    assert r.check_invariants() == "" and r.check_oracle() == ""
    # the restored engine keeps working
    r.insert(123, -456)
    assert r.check_oracle() == ""


def test_sentinel_cells_hidden_by_default():
    e = build([(3, 4)])
    assert e.export_text().count("\ncell ") == 1
    assert e.export_text(include_sentinels=True).count("\ncell ") == 4


def test_nearest_and_svg():
    e = build([(0, 0), (100, 0), (7, 93)])
    assert e.nearest(90, 10)[0] == 1
    svg = e.export_svg()
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")


def test_generator_deterministic():
    assert ivd.generate("uniform-disc", 50, 1) == ivd.generate("uniform-disc", 50, 1)
    assert ivd.generate("uniform-disc", 50, 1) != ivd.generate("uniform-disc", 50, 2)
