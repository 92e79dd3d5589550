#pragma once

#include <map>
#include <string>
#include <vector>

#include "jcdimer/errors.hpp"

namespace jcdimer {

/// Named real-valued channels sampled on a strictly increasing time grid.
struct TimeSeries {
    std::vector<double> times;
    std::map<std::string, std::vector<double>> channels;

    const std::vector<double>& channel(const std::string& name) const {
        auto it = channels.find(name);
        if (it == channels.end()) throw DomainError("TimeSeries: no channel named " + name);
        return it->second;
    }

    bool has_channel(const std::string& name) const { return channels.count(name) != 0; }

    std::size_t size() const { return times.size(); }

    void push_time(double t) { times.push_back(t); }
    void push_value(const std::string& name, double v) { channels[name].push_back(v); }

    void validate() const {
        for (std::size_t k = 1; k < times.size(); ++k)
            if (!(times[k] > times[k - 1]))
                throw DomainError("TimeSeries: times must be strictly increasing");
        for (const auto& [name, vals] : channels)
            if (vals.size() != times.size())
                throw DomainError("TimeSeries: channel " + name + " length mismatch");
    }
};

}  // namespace jcdimer
