"""Published model constants, kept as printed so the display precision is known."""

import math

from mirrorscan.models import (
    actuator,
    apply_correction,
    build_simplified_second_order,
    build_third_order,
    modal_analysis,
    transfer_function,
)


def display_match(value: float, printed: str, rel: float = 5e-5) -> bool:
    """``value`` agrees with a printed number within 5e-5 relative or half its last digit."""
    p = float(printed)
    mant = printed.lower().split("e")[0]
    exp = int(printed.lower().split("e")[1]) if "e" in printed.lower() else 0
    decimals = len(mant.split(".")[1]) if "." in mant else 0
    half_ulp = 0.5 * 10.0 ** (exp - decimals)
    return abs(value - p) <= max(rel * abs(p), half_ulp * (1 + 1e-9))


def _eig(model):
    return modal_analysis(model).eigenvalues


def MODEL_GOLDENS():
    small, large = actuator("small"), actuator("large")
    s3, l3 = build_third_order(small), build_third_order(large)
    s2, l2 = build_simplified_second_order(small), build_simplified_second_order(large)
    d2 = build_simplified_second_order(apply_correction(large, "damping_x10"))
    lz = apply_correction(large, "zero_pivot_stiffness")
    sz = apply_correction(small, "zero_pivot_stiffness")
    ts3, tl3 = transfer_function(small, 3), transfer_function(large, 3)
    ts2, tl2 = transfer_function(small, 2), transfer_function(large, 2)
    tlz = transfer_function(lz, 3)
    ms2, ml2 = modal_analysis(s2), modal_analysis(l2)
    es3, es2, el2, ed2 = _eig(s3), _eig(s2), _eig(l2), _eig(d2)
    elz, esz = _eig(build_third_order(lz)), _eig(build_third_order(sz))
    out = [
        ("A_sm[1,0]", s3.A[1, 0], "-17571"), ("A_sm[1,1]", s3.A[1, 1], "-42.857"),
        ("A_sm[1,2]", s3.A[1, 2], "404.29"), ("A_sm[2,1]", s3.A[2, 1], "-62.889"),
        ("A_sm[2,2]", s3.A[2, 2], "-1666.7"), ("B_sm[2]", s3.B[2], "222.22"),
        ("A_lm[1,0]", l3.A[1, 0], "-314.29"), ("A_lm[1,1]", l3.A[1, 1], "-4.0816"),
        ("A_lm[1,2]", l3.A[1, 2], "57.755"), ("A_lm[2,1]", l3.A[2, 1], "-62.889"),
        ("A_lm[2,2]", l3.A[2, 2], "-1666.7"),
        ("A_sms[1,0]", s2.A[1, 0], "-17571"), ("A_sms[1,1]", s2.A[1, 1], "-58.11"), ("B_sms[1]", s2.B[1], "53.90"),
        ("A_lms[1,0]", l2.A[1, 0], "-314.29"), ("A_lms[1,1]", l2.A[1, 1], "-6.261"), ("B_lms[1]", l2.B[1], "7.7"),
        ("A_lms_damped[1,1]", d2.A[1, 1], "-42.996"),
        ("K_sm", ts3.K, "0.0030678"), ("a0_sm", ts3.denom[0], "3.4146e-008"),
        ("a1_sm", ts3.denom[1], "5.8374e-005"), ("a2_sm", ts3.denom[2], "0.0039072"), ("a3_sm", ts3.denom[3], "1"),
        ("a0_sms", ts2.denom[0], "5.6911e-005"), ("a1_sms", ts2.denom[1], "0.0033072"),
        ("K_lm", tl3.K, "0.0245"), ("a0_lm", tl3.denom[0], "1.9091e-006"),
        ("a1_lm", tl3.denom[1], "0.00319"), ("a2_lm", tl3.denom[2], "0.0205"),
        ("a0_lms", tl2.denom[0], "0.003182"), ("a1_lms", tl2.denom[1], "0.01992"),
        ("K_lm_zero_stiffness", tlz.K, "1.23"), ("a0_lm_zero_stiffness", tlz.denom[0], "9.5832e-005"),
        ("a1_lm_zero_stiffness", tlz.denom[1], "0.16011"), ("a2_lm_zero_stiffness", tlz.denom[2], "1"),
        ("lambda_sm re", es3[0].real, "-29.282"), ("lambda_sm im", abs(es3[0].imag), "129.93"),
        ("lambda_sm(3)", es3[2].real, "-1651"),
        ("lambda_sms re", es2[0].real, "-29.056"), ("lambda_sms im", abs(es2[0].imag), "129.33"),
        ("lambda_lms re", el2[0].real, "-3.1305"), ("lambda_lms im", abs(el2[0].imag), "17.45"),
        ("lambda_lms_damped 1", ed2[0].real, "-9.3376"), ("lambda_lms_damped 2", ed2[1].real, "-33.658"),
        ("lambda_lm_zero 2", elz[1].real, "-6.2692"), ("lambda_lm_zero 3", elz[2].real, "-1664.5"),
        ("lambda_sm_zero 2", esz[1].real, "-58.669"), ("lambda_sm_zero 3", esz[2].real, "-1650.9"),
        ("T_sms", 1 / ms2.natural_frequency, "0.0075439"), ("xi_sms", ms2.damping_ratio, "0.2192"),
        ("omega_sms", ms2.natural_frequency, "132.56"), ("omega_smsR", ms2.resonant_frequency, "126.03"),
        ("f_smsR", ms2.resonant_frequency_hz, "20.058"),
        ("T_lms", 1 / ml2.natural_frequency, "0.056408"), ("xi_lms", ml2.damping_ratio, "0.17658"),
        ("omega_lms", ml2.natural_frequency, "17.728"), ("omega_lmsR", ml2.resonant_frequency, "17.166"),
        ("f_lmsR", ml2.resonant_frequency_hz, "2.7321"),
        ("lambda_lm_zero 1", abs(elz[0]), "0"), ("lambda_sm_zero 1", abs(esz[0]), "0"),
    ]
    return [(n, float(v), p) for n, v, p in out]


# time constants quoted alongside the models
TIME_CONSTANTS = (
    ("Te", lambda: actuator("small").Lm / actuator("small").Rm, "0.0006"),
    ("T_M_sm", lambda: math.sqrt(actuator("small").J / actuator("small").c), "0.0075"),
    ("T_M_lm", lambda: math.sqrt(actuator("large").J / actuator("large").c), "0.056408"),
)
