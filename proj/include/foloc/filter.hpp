#ifndef FOLOC_FILTER_HPP
#define FOLOC_FILTER_HPP

#include <complex>
#include <vector>

#include "foloc/types.hpp"

namespace foloc {

/// One second-order section, direct form II transposed.
struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;  // numerator
    double a1 = 0.0, a2 = 0.0;            // denominator (a0 == 1)
};

struct BandpassFilter {
    std::vector<Biquad> sections;
    double f1_hz = 0.0;
    double f2_hz = 0.0;
    double fs_hz = 0.0;

    /// Complex response of a single forward pass at frequency f (Hz).
    Complex response(double f_hz) const;
    /// Largest pole radius over all sections; drives transient pad length.
    double max_pole_radius() const;
};

/// Butterworth bandpass of analog order `order` per edge (2*order poles),
/// bilinear transform with pre-warped edges.
BandpassFilter design_butterworth_bandpass(double f1_hz, double f2_hz, double fs_hz,
                                           int order = 4);

/// Single forward pass through the cascade with steady-state initial
/// conditions for x[0].
Vec sosfilt(const std::vector<Biquad>& sections, const Vec& x);

/// Forward-backward filtering with odd-reflection edge extension. The
/// composite response is |H|^2: real and non-negative, so the operation
/// contributes no phase shift at any frequency.
Vec filtfilt(const BandpassFilter& filt, const Vec& x);

/// Zero-phase bandpass of every channel. Throws if the band is outside
/// (0, Nyquist).
TimeSeriesSet bandpass(const TimeSeriesSet& series, double f1_hz, double f2_hz,
                       int order = 4);

/// Remove the per-channel mean.
TimeSeriesSet detrend(const TimeSeriesSet& series);
void detrend_inplace(Vec& x);

}  // namespace foloc

#endif
