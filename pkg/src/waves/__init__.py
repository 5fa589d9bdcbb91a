"""1+1 wave solver, boundary and exterior data maps, and the g versus g' comparison."""

from src.waves.comparison import (
    ComparisonSetup,
    ProbeSet,
    compare_maps,
    future_cone_indicator,
    source_to_solution,
)
from src.waves.convergence import gaussian_solution, manufactured_convergence
from src.waves.experiments import (
    WaveExperiment,
    hyperboloid_dn_experiment,
    hyperboloid_sts_experiment,
)
from src.waves.fields import (
    BoundaryData,
    BoundaryTrace,
    SourceSpec,
    WaveField,
    bump_source,
    pulse_boundary_data,
    smooth_pulse,
    smooth_pulse_derivative,
)
from src.waves.grid import WaveGrid, cfl_timestep, characteristic_speed, null_speeds
from src.waves.solver import solve_cauchy, solve_ibvp
from src.waves.traces import dn_map, neumann_trace
