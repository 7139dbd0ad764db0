#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dive/motif.hpp"

namespace dive {

// Flat experiment configuration. Resolution order: defaults, then a
// key=value config file, then DIVE_<KEY> environment variables, then
// explicit flag overrides; later layers win key by key.
struct ExperimentConfig {
    // data: a dataset file path, or an inline generator config when empty
    std::string dataset;
    GenConfig gen;
    std::optional<std::uint64_t> gen_seed;  // defaults to a value derived from `seed`
    std::string task = "classification";    // expectation checked against the dataset

    // collection
    std::size_t m = 2;
    double lambda = 0.5;
    double tau = 1.0;
    std::size_t hidden = 64;
    std::size_t layers = 3;
    double dropout = 0.0;
    bool dropout_extractor = false;
    bool dropout_classifier = false;

    // optimization
    double lr = 1e-3;
    std::size_t lambda_warmup = 0;  // epochs before the diversity term engages
    double weight_decay = 0.0;
    std::size_t batch_size = 32;
    std::size_t max_epochs = 300;
    std::size_t patience = 50;

    // protocol
    std::optional<std::uint64_t> seed;  // mandatory; trial t runs with seed + t
    std::size_t trials = 1;
    std::string val_mode = "ood";  // "ood" selects on `val`, "id" on `id_val`
    std::string outdir = "out";
};

// Ordered (key, value) assignments; duplicates apply in order.
using ConfigMap = std::vector<std::pair<std::string, std::string>>;

// Lines are `key = value`; `#` starts a comment; blank lines are skipped.
// Syntax problems raise ParseError with `path:line:` context.
ConfigMap parse_config_file(const std::string& path);

// DIVE_<KEY> for every known key, dots mapped to underscores and
// uppercased (gen.bias_train -> DIVE_GEN_BIAS_TRAIN).
ConfigMap env_overrides();

// Applies assignments in order. Unknown keys and malformed values raise
// ConfigError.
void config_apply(ExperimentConfig& cfg, const ConfigMap& kv);

// Range checks; a missing seed raises ConfigError.
void config_validate(const ExperimentConfig& cfg);

// Canonical snapshot: every key, one `key=value` per line, parseable back.
std::string config_to_string(const ExperimentConfig& cfg);

}  // namespace dive
