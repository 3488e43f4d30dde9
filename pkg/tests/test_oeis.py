import os

import pytest

from rwlabel import oeis
from rwlabel.errors import BFileParseError, FetchError, OfflineError, ParameterError
from rwlabel.identities import a087547_lhs, a233449_terms


def bfile(seq_id, values, start=0, header=True):
    lines = ["# synthetic b-file for tests", "# second comment"] if header else []
    lines += [f"{start + i} {v}" for i, v in enumerate(values)]
    return "\n".join(lines) + "\n"


class FakeHTTP:
    def __init__(self, text=None, error=None):
        self.text, self.error, self.urls = text, error, []

    def __call__(self, url, timeout):
        self.urls.append(url)
        if self.error:
            raise self.error
        return self.text


def test_parse_bfile():
    terms = oeis.parse_bfile("# header\n\n0 1\n1 3\n  2   8  \n")
    assert terms == [(0, 1), (1, 3), (2, 8)]
    with pytest.raises(BFileParseError):
        oeis.parse_bfile("0 1\n0 2\n")
    with pytest.raises(BFileParseError):
        oeis.parse_bfile("0 x\n")
    with pytest.raises(BFileParseError):
        oeis.parse_bfile("# only comments\n")
    with pytest.raises(BFileParseError):
        oeis.parse_bfile("7\n")


def test_id_validation():
    assert oeis.check_id("A233449") == "233449"
    for bad in ("X1", "A12345", "A1234567", "a233449"):
        with pytest.raises(ParameterError):
            oeis.check_id(bad)
    with pytest.raises(ParameterError):
        oeis.fetch_bfile("X1", offline=True)


def test_offline_miss(tmp_path):
    with pytest.raises(OfflineError):
        oeis.fetch_bfile("A000001", offline=True, cache_dir=tmp_path)


def test_fetch_writes_cache_and_round_trips(tmp_path):
    text = bfile("A233449", a233449_terms(25))
    http = FakeHTTP(text)
    fetched = oeis.fetch_bfile("A233449", cache_dir=tmp_path, http_get=http)
    assert fetched.source == "fetched"
    assert http.urls == ["https://oeis.org/b233449.txt"]
    assert (tmp_path / "b233449.txt").read_text() == text
    again = oeis.fetch_bfile("A233449", offline=True, cache_dir=tmp_path)
    assert again.source == "cached"
    assert again.terms == fetched.terms
    assert again.values()[:5] == [1, 3, 8, 22, 68]
    assert not [p for p in os.listdir(tmp_path) if p.endswith(".tmp")]


def test_cache_is_consulted_before_network(tmp_path):
    (tmp_path / "b233449.txt").write_text(bfile("A233449", [1, 3, 8]))
    http = FakeHTTP(error=AssertionError("network must not be used"))
    assert oeis.fetch_bfile("A233449", cache_dir=tmp_path, http_get=http).source == "cached"


def test_network_failure_without_fallback(tmp_path):
    http = FakeHTTP(error=OSError("unreachable"))
    with pytest.raises(FetchError):
        oeis.fetch_bfile("A000001", cache_dir=tmp_path, http_get=http)
    assert not (tmp_path / "b000001.txt").exists()


def test_bad_download_is_not_cached(tmp_path):
    with pytest.raises(BFileParseError):
        oeis.fetch_bfile("A233449", cache_dir=tmp_path, http_get=FakeHTTP("<html>oops</html>\n"))
    assert not (tmp_path / "b233449.txt").exists()


def test_cache_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(oeis.CACHE_ENV, str(tmp_path))
    assert oeis.default_cache_dir() == tmp_path


def record(seq_id, values, start=0):
    return oeis.SequenceRecord(seq_id, tuple(oeis.parse_bfile(bfile(seq_id, values, start))), "cached")


def test_compare_sequence():
    rec = record("A233449", a233449_terms(20))
    report = oeis.compare_sequence(rec, a233449_terms(20), 0)
    assert report.agree and report.compared == 20
    shifted = oeis.compare_sequence(rec, a233449_terms(20), 1)
    assert not shifted.agree
    assert shifted.first_mismatch.position == 0
    with pytest.raises(ParameterError):
        oeis.compare_sequence(rec, [1, 2, 3], 100)


def test_compare_partial_overlap():
    rec = record("A233449", a233449_terms(10))
    report = oeis.compare_sequence(rec, a233449_terms(30), 0)
    assert report.compared == 10 and report.agree


def test_cross_validate_alignments():
    rec = record("A233449", a233449_terms(25))
    _, report, _ = oeis.cross_validate("A233449", record=rec)
    assert report.agree and report.compared == 25

    values = [a087547_lhs(n) for n in range(1, 16)]
    _, report, desc = oeis.cross_validate("A087547", record=record("A087547", values, start=1))
    assert report.agree and desc == "a(n) for n >= 1 at index n"
    _, report, desc = oeis.cross_validate("A087547", record=record("A087547", values, start=0))
    assert report.agree and desc == "a(n) for n >= 1 at index n-1"


def test_cross_validate_triangle_orientations():
    up = oeis.path_disrupted_triangle(6)
    assert up[:6] == [1, 2, 2, 3, 4, 4]
    down = oeis.path_disrupted_triangle(6, descending=True)
    assert down[:6] == [1, 2, 2, 4, 4, 3]
    for values, start in ((up, 1), (down, 0), (down, 1)):
        _, report, desc = oeis.cross_validate("A130128", record=record("A130128", values, start))
        assert report.agree, desc


def test_cross_validate_reports_mismatch():
    values = a233449_terms(20)
    values[7] += 1
    _, report, _ = oeis.cross_validate("A233449", record=record("A233449", values))
    assert not report.agree
    assert report.first_mismatch.index == 7


def test_cross_validate_needs_ten_terms():
    with pytest.raises(ParameterError):
        oeis.cross_validate("A233449", record=record("A233449", a233449_terms(9)))
    with pytest.raises(ParameterError):
        oeis.cross_validate("A000001", record=record("A000001", list(range(12))))


def test_format_bfile_round_trip():
    terms = [(0, 1), (1, 3), (2, 8)]
    assert oeis.parse_bfile(oeis.format_bfile("A233449", terms)) == terms
