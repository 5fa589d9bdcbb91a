from src.services.causality_suite import run_causality_suite
from src.services.figures import emit_figures
from src.services.runner import run
from src.services.wave_suite import run_wave_suite
from src.services.witness_suite import run_witness_suite

__all__ = ["emit_figures", "run", "run_causality_suite", "run_wave_suite", "run_witness_suite"]
