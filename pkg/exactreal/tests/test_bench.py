"""
Unit tests for the benchmark service
"""
import io
import pytest

from exactreal.errors import ParseError
from exactreal.schemas.bench import BenchRecord, CSV_FIELDS
from exactreal.services.bench import BENCH_OPS, BenchmarkService, parse_range


class TestParseRange:
    """Tests for --n-range parsing"""

    def test_arithmetic(self):
        """a:b:s steps by s and includes b"""
        assert parse_range("10:50:20") == [10, 30, 50]

    def test_geometric(self):
        """a:b:xs multiplies by s"""
        assert parse_range("1024:65536:x2") == [1024, 2048, 4096, 8192, 16384, 32768, 65536]

    def test_single(self):
        """One integer is a one-element range"""
        assert parse_range("64") == [64]

    @pytest.mark.parametrize("text", ["", "1:2", "1:9:0", "0:8:x2", "1:8:x1", "a:b:c"])
    def test_bad_ranges(self, text):
        """Malformed ranges are parse errors"""
        with pytest.raises(ParseError):
            parse_range(text)


class TestMeasure:
    """Tests for single measurements"""

    def test_add_row(self, cfg):
        """A successful row records time and working precision"""
        record = BenchmarkService.measure("add", 64, cfg=cfg)
        assert record.status == "ok"
        assert record.time_ns > 0
        assert record.work_prec >= 64 + 32
        assert record.k is None

    def test_series_row(self, cfg):
        """k is carried into the row"""
        record = BenchmarkService.measure("series", 32, k=3, cfg=cfg)
        assert record.status == "ok"
        assert record.k == 3

    def test_analytic_row(self, cfg):
        """Analytic evaluation of exp reports its working precision"""
        record = BenchmarkService.measure("analytic", 64, cfg=cfg)
        assert record.status == "ok"
        assert record.work_prec >= 64 + 32

    @pytest.mark.parametrize("op", ["max", "integrate", "ode"])
    def test_grid_ops(self, op, cfg):
        """Exponential-cost ops succeed at small n"""
        assert BenchmarkService.measure(op, 4, cfg=cfg).status == "ok"

    def test_failed_row(self, small_cap):
        """An exhausted precision cap becomes the row status"""
        record = BenchmarkService.measure("hexp", 16, k=10, cfg=small_cap)
        assert record.status == "precision_exhausted"
        assert record.work_prec == 0

    def test_unknown_op(self, cfg):
        """Only the listed ops exist"""
        assert "add" in BENCH_OPS
        with pytest.raises(ValueError):
            BenchmarkService.measure("div", 8, cfg=cfg)


class TestSweep:
    """Tests for sweeps and the CSV schema"""

    def test_sorted(self, cfg):
        """Rows come back ordered by n"""
        records = BenchmarkService.sweep("add", [128, 64], cfg=cfg)
        assert [r.n for r in records] == [64, 128]

    def test_csv(self):
        """Header line and rows survive a file"""
        records = [
            BenchRecord(op="exp", n=64, k=2, time_ns=1500, work_prec=128, restarts=0),
            BenchRecord(op="hexp", n=16, time_ns=20, status="precision_exhausted"),
        ]
        stream = io.StringIO()
        BenchmarkService.write_csv(records, stream)
        text = stream.getvalue()
        assert text.splitlines()[0] == ",".join(CSV_FIELDS)
        assert text.splitlines()[2] == "hexp,16,,20,0,0,precision_exhausted"
        stream.seek(0)
        assert BenchmarkService.read_csv(stream) == records

    def test_loglog_slope(self):
        """Quadratic times give slope 2"""
        records = [BenchRecord(op="mul", n=n, time_ns=n * n) for n in (16, 64, 256)]
        assert BenchmarkService.loglog_slope(records) == pytest.approx(2.0)

    def test_slope_needs_two_rows(self):
        """Failed rows do not count"""
        records = [
            BenchRecord(op="mul", n=16, time_ns=10),
            BenchRecord(op="mul", n=32, time_ns=10, status="grid_explosion"),
        ]
        with pytest.raises(ValueError):
            BenchmarkService.loglog_slope(records)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
