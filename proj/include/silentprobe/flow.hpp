#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "silentprobe/error.hpp"

namespace silentprobe {

enum class Label { Benign, Malicious };
enum class Protocol { TCP, UDP, Other };

inline const char* to_string(Label l) {
    return l == Label::Benign ? "Benign" : "Malicious";
}

inline const char* to_string(Protocol p) {
    switch (p) {
        case Protocol::TCP: return "TCP";
        case Protocol::UDP: return "UDP";
        default: return "OTHER";
    }
}

/// One network flow. Counts and byte totals are kept as doubles: they are
/// ML feature aggregates, and perturbation modules move them continuously.
struct FlowRecord {
    double duration = 0.0;       // seconds, >= 0
    double tot_pkts = 1.0;       // packet count, >= 1
    double tot_bytes = 0.0;      // bytes, >= 0
    double bytes_per_sec = 0.0;  // derived: tot_bytes / duration
    double pkts_per_sec = 0.0;   // derived: tot_pkts / duration
    double src_port = 0.0;       // [0, 65535]
    double dst_port = 0.0;       // [0, 65535]
    double timestamp = 0.0;      // seconds since trace start
    Protocol protocol = Protocol::Other;
    Label label = Label::Benign;
    std::string attack_category;
    // set when duration <= kMinDuration forced the rates to zero
    bool rates_flagged = false;
};

inline constexpr double kMinDuration = 1e-9;

/// Recompute the derived rate fields from the primary fields, zeroing and
/// flagging them for (near-)zero durations.
inline void reconcile_rates(FlowRecord& r) {
    if (r.duration > kMinDuration) {
        r.bytes_per_sec = r.tot_bytes / r.duration;
        r.pkts_per_sec = r.tot_pkts / r.duration;
        r.rates_flagged = false;
    } else {
        r.bytes_per_sec = 0.0;
        r.pkts_per_sec = 0.0;
        r.rates_flagged = true;
    }
}

inline bool rates_consistent(const FlowRecord& r, double rel_tol = 1e-6) {
    if (r.duration <= kMinDuration)
        return r.bytes_per_sec == 0.0 && r.pkts_per_sec == 0.0;
    const double pps = r.tot_pkts / r.duration;
    const double bps = r.tot_bytes / r.duration;
    const auto ok = [rel_tol](double actual, double expect) {
        return std::abs(actual - expect) <= rel_tol * std::max(std::abs(actual), 1e-300);
    };
    return ok(r.pkts_per_sec, pps) && ok(r.bytes_per_sec, bps);
}

/// All numeric flow features, in canonical order. This is the feature
/// universe that selection policies and probing operate over.
inline const std::vector<std::string>& numeric_feature_names() {
    static const std::vector<std::string> names = {
        "Duration", "TotPkts", "TotBytes", "BytesPerSec",
        "PktsPerSec", "SrcPort", "DstPort", "Timestamp"};
    return names;
}

inline bool is_numeric_feature(const std::string& name) {
    for (const auto& n : numeric_feature_names())
        if (n == name) return true;
    return false;
}

inline double get_feature(const FlowRecord& r, const std::string& name) {
    if (name == "Duration") return r.duration;
    if (name == "TotPkts") return r.tot_pkts;
    if (name == "TotBytes") return r.tot_bytes;
    if (name == "BytesPerSec") return r.bytes_per_sec;
    if (name == "PktsPerSec") return r.pkts_per_sec;
    if (name == "SrcPort") return r.src_port;
    if (name == "DstPort") return r.dst_port;
    if (name == "Timestamp") return r.timestamp;
    throw DataError("unknown flow feature: " + name);
}

inline void set_feature(FlowRecord& r, const std::string& name, double v) {
    if (name == "Duration") r.duration = v;
    else if (name == "TotPkts") r.tot_pkts = v;
    else if (name == "TotBytes") r.tot_bytes = v;
    else if (name == "BytesPerSec") r.bytes_per_sec = v;
    else if (name == "PktsPerSec") r.pkts_per_sec = v;
    else if (name == "SrcPort") r.src_port = v;
    else if (name == "DstPort") r.dst_port = v;
    else if (name == "Timestamp") r.timestamp = v;
    else throw DataError("unknown flow feature: " + name);
}

/// Hard validity conditions every stored record must satisfy.
inline bool record_valid(const FlowRecord& r) {
    const double fields[] = {r.duration,      r.tot_pkts,     r.tot_bytes,
                             r.bytes_per_sec, r.pkts_per_sec, r.src_port,
                             r.dst_port,      r.timestamp};
    for (double v : fields)
        if (!std::isfinite(v)) return false;
    if (r.duration < 0.0 || r.tot_pkts < 1.0 || r.tot_bytes < 0.0) return false;
    if (r.src_port < 0.0 || r.src_port > 65535.0) return false;
    if (r.dst_port < 0.0 || r.dst_port > 65535.0) return false;
    return rates_consistent(r);
}

struct FeatureStats {
    double mean = 0.0;
    double std = 0.0;  // population (1/N) standard deviation
    bool degenerate = false;
};

using NormStats = std::map<std::string, FeatureStats>;

/// An ordered collection of flows plus the feature view analysis modules
/// operate on. `norm_stats` carries per-feature (mean, std): for a
/// standardized dataset these invert the transform; for a raw dataset they
/// are the reference scale attached by the pipeline (IDS training stats).
struct FlowDataset {
    std::vector<FlowRecord> records;
    std::vector<std::string> feature_names;
    std::optional<NormStats> norm_stats;
    bool standardized = false;

    std::size_t size() const { return records.size(); }
    bool empty() const { return records.empty(); }

    bool has_feature(const std::string& name) const {
        for (const auto& f : feature_names)
            if (f == name) return true;
        return false;
    }

    /// Row-major matrix of the selected features.
    std::vector<std::vector<double>> feature_matrix() const {
        std::vector<std::vector<double>> m(records.size());
        for (std::size_t i = 0; i < records.size(); ++i) {
            m[i].reserve(feature_names.size());
            for (const auto& f : feature_names)
                m[i].push_back(get_feature(records[i], f));
        }
        return m;
    }

    std::size_t count(Label l) const {
        std::size_t n = 0;
        for (const auto& r : records)
            if (r.label == l) ++n;
        return n;
    }
};

/// Applies additive feature deltas to a record and restores the flow
/// invariants. Deltas on the derived rate features are absorbed into their
/// numerator primaries at the final duration, then the rates are re-derived,
/// so a requested rate change of d moves the rate by exactly d (plus any
/// shift induced by primary deltas applied alongside it).
inline void apply_feature_deltas(FlowRecord& r,
                                 const std::map<std::string, double>& deltas) {
    const auto delta = [&deltas](const char* name) {
        auto it = deltas.find(name);
        return it == deltas.end() ? 0.0 : it->second;
    };
    for (const auto& [name, _] : deltas)
        if (!is_numeric_feature(name))
            throw DataError("unknown flow feature: " + name);

    r.duration = std::max(0.0, r.duration + delta("Duration"));
    r.tot_pkts = std::max(1.0, r.tot_pkts + delta("TotPkts"));
    r.tot_bytes = std::max(0.0, r.tot_bytes + delta("TotBytes"));
    r.timestamp = std::max(0.0, r.timestamp + delta("Timestamp"));
    if (double d = delta("SrcPort"); d != 0.0)
        r.src_port = std::clamp(std::round(r.src_port + d), 0.0, 65535.0);
    if (double d = delta("DstPort"); d != 0.0)
        r.dst_port = std::clamp(std::round(r.dst_port + d), 0.0, 65535.0);

    if (r.duration > kMinDuration) {
        if (double d = delta("BytesPerSec"); d != 0.0)
            r.tot_bytes = std::max(0.0, r.tot_bytes + d * r.duration);
        if (double d = delta("PktsPerSec"); d != 0.0)
            r.tot_pkts = std::max(1.0, r.tot_pkts + d * r.duration);
    }
    reconcile_rates(r);
}

} // namespace silentprobe
