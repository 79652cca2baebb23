import json
import math

import numpy as np
import pytest

from mirrorscan.cli import _report, format_csv, main, read_csv
from mirrorscan.config import RunConfig, load_config, parse_config
from mirrorscan.errors import ConfigError
from mirrorscan.models import CALIBRATED_TC


def test_empty_config_gives_defaults():
    assert parse_config("") == RunConfig()
    assert parse_config("# comment only\n\n") == RunConfig()
    cfg = RunConfig()
    assert cfg.tc_nm == CALIBRATED_TC and cfg.u0_volts == 20.0 and cfg.ts_demand_s is None


def test_override_and_two_rate():
    cfg = parse_config("actuator.name = small\ncontroller.ts_control_s = 0.001\ncontroller.ts_demand_s = 0.004\n"
                       "controller.prediction = off  # inline comment\n")
    assert cfg.actuator == "small" and cfg.prediction is False
    c = cfg.controller()
    assert c.Ts_control == 1e-3 and c.Ts_demand == 4e-3 and c.demand_ratio == 4
    d = cfg.demand()
    assert d.amplitude == pytest.approx(math.radians(3.57)) and d.frequency == 20.0 and d.waveform == "-sin"


def test_auto_values_map_to_none():
    cfg = parse_config("controller.ts_demand_s = auto\n", RunConfig(ts_demand_s=4e-3))
    assert cfg.ts_demand_s is None


@pytest.mark.parametrize("text,line", [
    ("actuator.name = large\nbogus.key = 1\n", 2),
    ("controller.u0_volts = lots\n", 1),
    ("just text\n", 1),
    ("controller.prediction = maybe\n", 1),
])
def test_config_errors_name_the_line(text, line):
    with pytest.raises(ConfigError) as exc:
        parse_config(text)
    assert exc.value.line == line


def test_config_rejects_bad_combination():
    with pytest.raises(ConfigError):
        parse_config("plant.kind = linear2\nactuator.correction = zero_pivot_stiffness\n")


def test_load_config(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("run.duration_s = 0.1\n")
    assert load_config(path).duration_s == 0.1
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.cfg")


def test_csv_format_and_round_trip():
    text = format_csv(("a", "b"), [(1.0, -0.0000001), (2.5, 3.0)])
    assert text == "a,b\n1.000000,0.000000\n2.500000,3.000000\n"
    header, data = read_csv(text)
    assert header == ("a", "b") and np.array_equal(data, [[1.0, 0.0], [2.5, 3.0]])


def test_scan_command_is_deterministic(capsys):
    assert main(["scan", "--duration", "0.2"]) == 0
    first = capsys.readouterr().out
    assert main(["scan", "--duration", "0.2"]) == 0
    assert capsys.readouterr().out == first
    header, data = read_csv(first)
    assert header == ("t_s", "phi_lm_deg", "phi_sm_deg", "x_m", "y_m") and data.shape == (51, 5)
    assert "\r" not in first


def test_scan_zero_duration_prints_header_only(capsys):
    assert main(["scan", "--duration", "0"]) == 0
    assert capsys.readouterr().out == "t_s,phi_lm_deg,phi_sm_deg,x_m,y_m\n"


def test_scan_pass_files(tmp_path, capsys):
    assert main(["scan", "--duration", "0.4", "--pass-dir", str(tmp_path), "--out", str(tmp_path / "all.csv")]) == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["all.csv", "pass_01_odd.csv", "pass_02_even.csv"]


def test_model_info(capsys):
    assert main(["model-info", "--actuator", "small", "--order", "2"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["resonant_frequency_hz"] == pytest.approx(20.058, rel=1e-4)


def test_toc_solve(capsys):
    assert main(["toc-solve", "--actuator", "small", "--u0", "20", "--target-deg", "3.57",
                 "--accuracy", "3.5e-10", "9e-7", "6.5e-8"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["solution"]["total_time_s"] == pytest.approx(0.016257, abs=2e-4)
    assert out["certificate"]["sign_match"] is True


def test_reproduce_table2(capsys):
    assert main(["reproduce", "table2"]) == 0
    assert "FAIL" not in capsys.readouterr().err


def test_step_with_config(tmp_path, capsys):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("run.duration_s = 0.01\n")
    assert main(["step", "--config", str(cfg), "--plant", "linear3"]) == 0
    header, data = read_csv(capsys.readouterr().out)
    assert header[0] == "t_s" and "phi_deg" in header and data[-1, 0] == pytest.approx(0.01)


def test_exit_codes(tmp_path, capsys):
    assert main(["no-such-command"]) == 1
    assert main(["toc-solve"]) == 1
    bad = tmp_path / "bad.cfg"
    bad.write_text("nope = 1\n")
    assert main(["track", "--config", str(bad)]) == 1
    assert "line 1" in capsys.readouterr().err
    assert _report("demo", [("value", 2.0, 1.0)]) == 2
    assert _report("demo", [("value", 0.5, 1.0)]) == 0
