"""Modeling, time-optimal control and scan simulation for a two-mirror LIDAR scanner."""

from .errors import *  # noqa: F401,F403
from .models import (
    CALIBRATED_TC,
    LARGE_MIRROR,
    SMALL_MIRROR,
    ActuatorParams,
    LinearModel,
    actuator,
    apply_correction,
    bode_point,
    build_simplified_second_order,
    build_third_order,
    modal_analysis,
    transfer_function,
)
from .scan import ScanConfig, ScanSample, angles_to_plane, calibrate_separation, generate_scan, ideal_angles
from .sim import (
    InputSignal,
    TimeSeries,
    calibrate_friction,
    friction_torque,
    integrate_friction,
    integrate_linear,
    propagate_lti,
)
from .toc import BangBangSolution, PmpCertificate, TocProblem, certify, reach_time, solve
from .tracking import (
    ControllerConfig,
    DemandSignal,
    FrictionPlantSpec,
    TrackingResult,
    compare_runs,
    measure_phase_delay,
    run_tracking,
)

__version__ = "0.1.0"
