"""Checked-in transcriptions under golden/paper and the generators they are compared to."""
import logging
from pathlib import Path
from typing import Callable, Dict, List, Union

from core.rings import LaurentPoly, ZPoly
from core.textform import parse_text
from sequences.casoratian import gen_Q_t
from sequences.conversion import conversion_table, gen_Q_q
from sequences.steps import bch_chain
from sequences.xseq import even_gauge
from sequences.zero_data import q0_closed

logger = logging.getLogger(__name__)

Value = Union[LaurentPoly, ZPoly]

GOLDEN: Dict[str, Callable[[], Value]] = {}
for _k in range(1, 5):
    GOLDEN[f"P{_k}"] = lambda k=_k: bch_chain(4)[k]
    GOLDEN[f"q{_k}"] = lambda k=_k: conversion_table(4).q_of_t[k]
    GOLDEN[f"t{2 * _k - 1}"] = lambda k=_k: conversion_table(4).t_of_q[2 * k - 1]
for _k in range(1, 4):
    GOLDEN[f"Q{_k}"] = lambda k=_k: gen_Q_q(3)[k]
    GOLDEN[f"Qt{_k}"] = lambda k=_k: gen_Q_t(3)[k]
for _k in range(1, 3):
    GOLDEN[f"t{2 * _k}"] = lambda k=_k: even_gauge(2)[0][2 * k]
for _k in range(1, 7):
    GOLDEN[f"Q0_{_k}"] = lambda k=_k: q0_closed(k)


def load_golden(name: str, golden_dir: Path) -> ZPoly:
    path = Path(golden_dir) / "paper" / f"{name}.txt"
    return parse_text(path.read_text())


def golden_mismatches(golden_dir: Path) -> List[str]:
    """Names whose computed value differs from the transcription."""
    bad = []
    for name, compute in GOLDEN.items():
        expected = load_golden(name, golden_dir)
        if compute() != expected:
            logger.error(f"Golden {name} differs: computed {compute()}, expected {expected}")
            bad.append(name)
        else:
            logger.info(f"Golden {name} matches")
    return bad
