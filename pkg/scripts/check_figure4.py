import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from core.config import load_environment
from lattice.evolve import dkdv_evolve
from lattice.grid import Window, grid_to_tsv, ones_seed, parse_tsv

settings = load_environment()
golden_path = settings.golden_dir / "figure4.tsv"
if not golden_path.exists():
    print(f"Golden table missing: {golden_path}")
    sys.exit(2)

window = Window.figure4()
grid = dkdv_evolve(ones_seed(window), window)
produced = grid_to_tsv(grid)
expected = golden_path.read_text()

if produced == expected:
    print(f"Figure 4 reproduced byte-exactly ({len(window.ns())} rows x {len(window.ms())} columns)")
    sys.exit(0)

for (n, _), got, want in zip(grid.rows(), parse_tsv(produced), parse_tsv(expected)):
    if got != want:
        print(f"Row n = {n:3d}: got {' '.join(got)}")
        print(f"           want {' '.join(want)}")
sys.exit(1)
