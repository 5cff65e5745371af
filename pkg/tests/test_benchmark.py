import subprocess
import sys
from pathlib import Path

BENCH = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"


def test_benchmark_quick_run():
    out = subprocess.run([sys.executable, str(BENCH), "--quick", "--repeat", "1"],
                         capture_output=True, text=True, timeout=300)
    assert out.returncode == 0, out.stderr
    lines = out.stdout.splitlines()
    assert lines[0].startswith("compiled SNF")
    assert any(l.startswith("SNF ") for l in lines) and any(l.startswith("elim ") for l in lines)
