#ifndef FOLOC_TYPES_HPP
#define FOLOC_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace foloc {

using Vec = std::vector<double>;
using Complex = std::complex<double>;

/// Bad user input: malformed files, inconsistent channel sets, out-of-range
/// parameters. Mapped to process exit code 1 by the CLI.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Runtime or numerical failure (I/O, non-finite data, solver breakdown).
/// Mapped to process exit code 2 by the CLI.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class ChannelKind {
    rotor_angle,   // generator internal angle deviation (rad)
    rotor_speed,   // generator speed deviation (rad/s)
    bus_angle,     // bus voltage angle deviation (rad)
    bus_freq,      // bus frequency deviation (rad/s)
    line_flow,     // active line flow deviation (pu)
    input,         // injected disturbance (pu)
};

const char* to_string(ChannelKind k);
ChannelKind channel_kind_from_string(const std::string& s);

/// True for kinds that move with rotor speed (their impulse response carries
/// a +d/dt pairing relative to the angle-like kinds).
inline bool is_speed_like(ChannelKind k) {
    return k == ChannelKind::rotor_speed || k == ChannelKind::bus_freq;
}

struct ChannelMeta {
    std::string id;
    ChannelKind kind = ChannelKind::input;
    std::string location;  // generator id, bus id, or "from|to" for line flows

    bool operator==(const ChannelMeta&) const = default;
};

/// Uniformly sampled multichannel record. Channels are stored column-wise
/// (one contiguous vector per channel) since nearly every consumer walks a
/// single channel at a time.
class TimeSeriesSet {
  public:
    TimeSeriesSet() = default;
    TimeSeriesSet(double dt, double t0) : dt_(dt), t0_(t0) {
        if (dt <= 0.0) throw ValidationError("TimeSeriesSet: dt must be positive");
    }

    double dt() const { return dt_; }
    double t0() const { return t0_; }
    std::size_t n_samples() const { return channels_.empty() ? 0 : data_[0].size(); }
    std::size_t n_channels() const { return channels_.size(); }

    const std::vector<ChannelMeta>& channels() const { return channels_; }
    const ChannelMeta& meta(std::size_t i) const { return channels_.at(i); }

    const Vec& data(std::size_t i) const { return data_.at(i); }
    Vec& data(std::size_t i) { return data_.at(i); }

    void add_channel(ChannelMeta meta, Vec samples);

    /// Index of channel `id`, or -1 when absent.
    int find(const std::string& id) const;
    /// Index of channel `id`; throws ValidationError naming the channel.
    std::size_t index_of(const std::string& id) const;
    bool has(const std::string& id) const { return find(id) >= 0; }

    double time_at(std::size_t sample) const { return t0_ + dt_ * static_cast<double>(sample); }

    /// New set holding only the named channels, in the given order.
    TimeSeriesSet select(const std::vector<std::string>& ids) const;
    /// New set restricted to samples in [t_begin, t_end) (absolute time).
    TimeSeriesSet window(double t_begin, double t_end) const;

    /// Throws NumericError if any sample is non-finite.
    void check_finite() const;

  private:
    double dt_ = 1.0;
    double t0_ = 0.0;
    std::vector<ChannelMeta> channels_;
    std::vector<Vec> data_;
};

}  // namespace foloc

#endif
