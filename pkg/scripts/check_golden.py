import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from core.config import load_environment
from sequences.golden import GOLDEN, golden_mismatches

logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')

settings = load_environment()
print(f"Checking {len(GOLDEN)} transcriptions in {settings.golden_dir}")
print("-" * 50)

bad = golden_mismatches(settings.golden_dir)
if bad:
    print(f"Mismatched: {', '.join(bad)}")
    sys.exit(1)
print("All golden transcriptions reproduced")
