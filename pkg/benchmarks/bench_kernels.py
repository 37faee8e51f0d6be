"""Time the compiled and pure-Python kernels on closure and labeling.

    python3 benchmarks/bench_kernels.py --repeat 3
"""

import argparse
import time

from lascoux import kernels
from lascoux.compositions import parse_composition
from lascoux.diagrams import key_diagram
from lascoux.labeling import column_content

WORKLOADS = ["0,0,2,0,3,1,2", "0,1,2,3,0", "2,0,3,1,2,1"]


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench(alpha, repeat):
    start = key_diagram(alpha)
    content = column_content(alpha)
    rows = []
    for name, mod in kernels.backends().items():
        kd_states = mod.closure(start.kcols, start.gcols, False, 10**7)
        kkd_states = None

        def run_kkd():
            nonlocal kkd_states
            kkd_states = mod.closure(start.kcols, start.gcols, True, 10**7)

        t_kd = _best(lambda: mod.closure(start.kcols, start.gcols, False, 10**7), repeat)
        t_kkd = _best(run_kkd, repeat)
        t_lab = _best(lambda: [mod.label_columns(k, content) for k, _ in kd_states], repeat)
        rows.append((name, len(kd_states), len(kkd_states), t_kd, t_kkd, t_lab))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("alphas", nargs="*", default=WORKLOADS)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    print(f"{'alpha':<16}{'backend':<9}{'|KD|':>7}{'|KKD|':>9}{'KD s':>9}{'KKD s':>9}{'label s':>9}")
    for text in args.alphas:
        alpha = parse_composition(text)
        rows = bench(alpha, args.repeat)
        for name, nkd, nkkd, t_kd, t_kkd, t_lab in rows:
            print(f"{text:<16}{name:<9}{nkd:>7}{nkkd:>9}{t_kd:>9.4f}{t_kkd:>9.4f}{t_lab:>9.4f}")
        if len(rows) == 2:
            py, cy = rows[0], rows[1]
            print(f"{'':<16}speedup  KD x{py[3] / cy[3]:.1f}  KKD x{py[4] / cy[4]:.1f}  label x{py[5] / cy[5]:.1f}")


if __name__ == "__main__":
    main()
