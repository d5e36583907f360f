#include "foloc/types.hpp"

#include <cmath>

namespace foloc {

const char* to_string(ChannelKind k) {
    switch (k) {
        case ChannelKind::rotor_angle: return "rotor_angle";
        case ChannelKind::rotor_speed: return "rotor_speed";
        case ChannelKind::bus_angle: return "bus_angle";
        case ChannelKind::bus_freq: return "bus_freq";
        case ChannelKind::line_flow: return "line_flow";
        case ChannelKind::input: return "input";
    }
    return "unknown";
}

ChannelKind channel_kind_from_string(const std::string& s) {
    if (s == "rotor_angle") return ChannelKind::rotor_angle;
    if (s == "rotor_speed") return ChannelKind::rotor_speed;
    if (s == "bus_angle") return ChannelKind::bus_angle;
    if (s == "bus_freq") return ChannelKind::bus_freq;
    if (s == "line_flow") return ChannelKind::line_flow;
    if (s == "input") return ChannelKind::input;
    throw ValidationError("unknown channel kind: " + s);
}

void TimeSeriesSet::add_channel(ChannelMeta meta, Vec samples) {
    if (!channels_.empty() && samples.size() != data_[0].size())
        throw ValidationError("channel " + meta.id + " length mismatch");
    if (find(meta.id) >= 0) throw ValidationError("duplicate channel id: " + meta.id);
    channels_.push_back(std::move(meta));
    data_.push_back(std::move(samples));
}

int TimeSeriesSet::find(const std::string& id) const {
    for (std::size_t i = 0; i < channels_.size(); ++i)
        if (channels_[i].id == id) return static_cast<int>(i);
    return -1;
}

std::size_t TimeSeriesSet::index_of(const std::string& id) const {
    int i = find(id);
    if (i < 0) throw ValidationError("missing channel: " + id);
    return static_cast<std::size_t>(i);
}

TimeSeriesSet TimeSeriesSet::select(const std::vector<std::string>& ids) const {
    TimeSeriesSet out(dt_, t0_);
    for (const auto& id : ids) {
        std::size_t i = index_of(id);
        out.add_channel(channels_[i], data_[i]);
    }
    return out;
}

TimeSeriesSet TimeSeriesSet::window(double t_begin, double t_end) const {
    if (t_end <= t_begin) throw ValidationError("window: empty time range");
    std::size_t n = n_samples();
    std::size_t first = n, last = n;
    for (std::size_t s = 0; s < n; ++s) {
        double t = time_at(s);
        if (first == n && t >= t_begin) first = s;
        if (t < t_end) last = s + 1;
    }
    if (first >= last) throw ValidationError("window: no samples in range");
    TimeSeriesSet out(dt_, time_at(first));
    for (std::size_t i = 0; i < channels_.size(); ++i) {
        Vec seg(data_[i].begin() + static_cast<long>(first),
                data_[i].begin() + static_cast<long>(last));
        out.add_channel(channels_[i], std::move(seg));
    }
    return out;
}

void TimeSeriesSet::check_finite() const {
    for (std::size_t i = 0; i < channels_.size(); ++i)
        for (double v : data_[i])
            if (!std::isfinite(v))
                throw NumericError("non-finite sample in channel " + channels_[i].id);
}

}  // namespace foloc
