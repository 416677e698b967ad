#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "neqr/circuit.hpp"

namespace neqr {

// One sweep measurement: both circuit costs for a random image of order n,
// plus the two derived figures of merit.
struct SweepRecord {
    unsigned m = 0; // control count, always 2n
    unsigned n = 0;
    unsigned q = 0;
    uint64_t seed = 0;
    CostModel model = CostModel::McnotPlain;
    uint64_t qc_nonopt = 0;
    uint64_t qc_opt = 0;
    double rate = 0.0;          // qc_nonopt / qc_opt
    double ratio_percent = 0.0; // (1 - qc_opt / qc_nonopt) * 100
};

// Mean and sample standard deviation of rate and ratio over all records
// sharing one m.
struct AggregateRecord {
    unsigned m = 0;
    size_t samples = 0;
    double rate_mean = 0.0;
    double rate_sd = 0.0;
    double ratio_mean = 0.0;
    double ratio_sd = 0.0;
};

// (1 - qc_opt / qc_nonopt) * 100.
double compression_ratio(uint64_t qc_nonopt, uint64_t qc_opt);

// qc_nonopt / qc_opt.
double optimization_rate(uint64_t qc_nonopt, uint64_t qc_opt);

// For each n in [n_min, n_max] and each seed, in that order: generate a
// random image, synthesize and cost the minterm and the Reed-Muller circuit,
// and record both figures. A record with qc_opt > qc_nonopt is kept but
// flagged on stderr.
std::vector<SweepRecord> sweep(unsigned n_min, unsigned n_max, unsigned q,
                               std::span<const uint64_t> seeds, CostModel model);

std::vector<AggregateRecord> aggregate_by_m(std::span<const SweepRecord> records);

// CSV with header m,n,q,seed,model,qc_nonopt,qc_opt,rate,ratio_percent;
// doubles printed to 6 significant digits, LF line endings.
std::string to_csv(std::span<const SweepRecord> records);
std::string to_csv(std::span<const AggregateRecord> records);

// JSON array with the same field names and the same 6-digit rounding.
std::string to_json(std::span<const SweepRecord> records);
std::string to_json(std::span<const AggregateRecord> records);

} // namespace neqr
