"""Pre-assessing entanglement from mixing two Gaussian states at a beam splitter.

Covariance matrices use the vacuum = I/2 convention throughout.
"""

from .channels import ChannelSpec, asymptotic_cm, evolve, thermal_photons_from_purity
from .criterion import (
    CriterionVerdict,
    assess,
    critical_transmission_asymptote,
    critical_transmission_limit,
    threshold,
)
from .gaussian import (
    PhysicalityError,
    SingleModeCM,
    SqueezedThermalParams,
    check_physical,
    fidelity,
    make_cm,
    purity,
    squeezed,
)
from .mixing import TwoModeCM, mix
from .ppt import PPTReport, ppt_check, two_mode_physical
from .scenarios import (
    CriterionReport,
    Kind,
    ScenarioSpec,
    SweepRow,
    critical_transmission,
    curves,
    report,
    sweep,
    thermal_content_sweep,
)

__version__ = "0.1.0"
