#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seizekit {

// Per-signal metadata decoded from an EDF signal header block.
struct SignalHeader {
    std::string label;
    std::string transducer;
    std::string physical_dim;  // e.g. "uV"
    double physical_min = 0.0;
    double physical_max = 0.0;
    int digital_min = 0;
    int digital_max = 0;
    int samples_per_record = 0;
    std::string prefiltering;

    double scale() const {
        return (physical_max - physical_min) /
               static_cast<double>(digital_max - digital_min);
    }
};

struct Channel {
    SignalHeader header;
    std::vector<double> samples;  // physical units
    bool is_annotation = false;
    // Raw TAL byte blocks, one per data record; only for annotation channels.
    // Kept verbatim so a recording can be re-serialised byte-exactly.
    std::vector<std::string> raw_records;

    double sampling_rate(double record_duration) const {
        return static_cast<double>(header.samples_per_record) / record_duration;
    }
};

// One EDF file worth of signal data in physical units.
struct Recording {
    std::string patient_id;
    std::string recording_id;
    std::string start_date;  // dd.mm.yy, verbatim from the header
    std::string start_time;  // hh.mm.ss, verbatim from the header
    std::string reserved;    // 44-byte reserved field ("EDF+C" etc.)
    double record_duration = 1.0;  // seconds per data record
    std::size_t n_records = 0;
    std::vector<Channel> channels;

    double duration() const { return record_duration * static_cast<double>(n_records); }

    // Indices of non-annotation channels.
    std::vector<std::size_t> signal_channels() const {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < channels.size(); ++i)
            if (!channels[i].is_annotation) idx.push_back(i);
        return idx;
    }
};

enum class ChannelScope { AllChannels, Named };

struct AnnotationEvent {
    double onset = 0.0;     // seconds from recording start
    double duration = 0.0;  // seconds
    std::string label;      // e.g. "seiz", "bckg"
    ChannelScope scope = ChannelScope::AllChannels;
    std::string channel;  // set when scope == Named
};

enum class LabelSource { Embedded, External };

struct LabelRow {
    std::size_t epoch_index = 0;
    int label = 0;  // 0 background, 1 seizure
    LabelSource source = LabelSource::Embedded;
};

struct LabelTable {
    double epoch_length = 1.0;
    std::vector<LabelRow> rows;
};

// Artifact flag bits, stored as a bitmask in EpochRecord and the store.
enum EpochFlag : std::uint32_t {
    kFlagSteepSlope = 1u << 0,
    kFlagFlatline = 1u << 1,
    kFlagHighSimilarity = 1u << 2,
};

// One channel-set x epoch-length window: the unit everything downstream
// works on.
struct EpochRecord {
    std::string recording_id;
    std::size_t epoch_index = 0;
    double start = 0.0;  // seconds
    std::size_t n_channels = 0;
    std::size_t n_samples = 0;  // per channel
    std::vector<double> samples;  // row-major, channel-major [c * n_samples + t]
    int label = 0;
    std::uint32_t flags = 0;
    std::string split_tag;

    double* channel(std::size_t c) { return samples.data() + c * n_samples; }
    const double* channel(std::size_t c) const {
        return samples.data() + c * n_samples;
    }
    bool has_flags() const { return flags != 0; }
};

// Named, ordered feature values for one epoch.
struct FeatureVector {
    std::vector<std::string> names;
    std::vector<double> values;
};

// Per-epoch probabilities from one model over one recording.
struct PredictionStream {
    std::string recording_id;
    std::string model_id;
    std::size_t first_index = 0;  // epoch index of probabilities[0]
    std::vector<double> probabilities;
};

// Dense row-major matrix; enough linear algebra for this pipeline.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    double* row(std::size_t r) { return data.data() + r * cols; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }
};

}  // namespace seizekit
