"""Ideal two-mirror scan: plane positions for the first pass and the fitted mirror separation."""

from mirrorscan.reference_data import IDEAL_SCAN
from mirrorscan.scan import calibrate_separation, generate_scan, samples_from_rows


def main():
    passes = generate_scan(duration=0.4)
    print(f"{len(passes)} passes of {len(passes[0].samples)} samples")
    for s in passes[0].samples[::10]:
        print(f"  t={s.t:.3f} s  angles ({s.phi_lm:7.3f}, {s.phi_sm:7.3f}) deg  -> ({s.x:8.3f}, {s.y:8.3f}) m")
    d, rms = calibrate_separation(samples_from_rows(IDEAL_SCAN))
    print(f"separation fitted to the tabulated scan: {d:.4f} m (rms {rms:.4f} m)")


if __name__ == "__main__":
    main()
