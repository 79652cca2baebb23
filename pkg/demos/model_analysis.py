"""Model summary for both mirrors: eigenvalues, resonance and the full vs simplified response."""

import math

from mirrorscan import actuator, bode_point, build_simplified_second_order, build_third_order, modal_analysis


def main():
    for name in ("small", "large"):
        p = actuator(name)
        full, simp = build_third_order(p), build_simplified_second_order(p)
        ma = modal_analysis(simp)
        print(f"{name} mirror")
        print("  third-order eigenvalues:", ", ".join(f"{complex(v):.4g}" for v in modal_analysis(full).eigenvalues))
        print(f"  natural frequency {ma.natural_frequency:.3f} rad/s, damping {ma.damping_ratio:.4f}, "
              f"resonance {ma.resonant_frequency_hz:.3f} Hz")
        for w in (1.0, 2 * math.pi * ma.resonant_frequency_hz, 1000.0):
            m3, _ = bode_point(full, w)
            m2, _ = bode_point(simp, w)
            print(f"  |G(j{w:.1f})| full {m3:.6g} rad/V, simplified {m2:.6g} rad/V")


if __name__ == "__main__":
    main()
