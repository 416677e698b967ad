#include "neqr/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "json.hpp"

#include "neqr/error.hpp"
#include "neqr/image.hpp"

namespace neqr {

namespace {

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Keeps JSON numerically identical to the CSV text.
double round6(double v) { return std::strtod(fmt6(v).c_str(), nullptr); }

} // namespace

double compression_ratio(uint64_t qc_nonopt, uint64_t qc_opt) {
    if (qc_nonopt == 0) {
        raise(ErrorKind::ZeroBaseline, "non-optimized cost is zero");
    }
    return (1.0 - static_cast<double>(qc_opt) / static_cast<double>(qc_nonopt)) * 100.0;
}

double optimization_rate(uint64_t qc_nonopt, uint64_t qc_opt) {
    if (qc_opt == 0) {
        raise(ErrorKind::ZeroOptimizedCost, "optimized cost is zero");
    }
    return static_cast<double>(qc_nonopt) / static_cast<double>(qc_opt);
}

std::vector<SweepRecord> sweep(unsigned n_min, unsigned n_max, unsigned q,
                               std::span<const uint64_t> seeds, CostModel model) {
    if (n_min < 1 || n_max > 16 || n_min > n_max) {
        raise(ErrorKind::OrderOutOfRange, "n range " + std::to_string(n_min) + ".." +
                                              std::to_string(n_max) + " outside [1,16]");
    }
    std::vector<SweepRecord> records;
    records.reserve((n_max - n_min + 1) * seeds.size());
    for (unsigned n = n_min; n <= n_max; ++n) {
        for (uint64_t seed : seeds) {
            const ImagePlanes planes = extract_planes(random_image(n, q, seed));

            SweepRecord rec;
            rec.m = 2 * n;
            rec.n = n;
            rec.q = q;
            rec.seed = seed;
            rec.model = model;
            // Circuits are scoped so only one lives at a time; at n = 11 each
            // holds tens of millions of gates.
            {
                const Circuit esop = synthesize_esop(planes);
                rec.qc_nonopt = circuit_cost(esop, model);
            }
            {
                const Circuit pprm = synthesize_pprm(planes);
                rec.qc_opt = circuit_cost(pprm, model);
            }
            rec.rate = optimization_rate(rec.qc_nonopt, rec.qc_opt);
            rec.ratio_percent = compression_ratio(rec.qc_nonopt, rec.qc_opt);
            if (rec.qc_opt > rec.qc_nonopt) {
                std::fprintf(stderr,
                             "warning: optimized cost %llu exceeds baseline %llu "
                             "(n=%u seed=%llu model=%s)\n",
                             static_cast<unsigned long long>(rec.qc_opt),
                             static_cast<unsigned long long>(rec.qc_nonopt), n,
                             static_cast<unsigned long long>(seed), to_string(model));
            }
            records.push_back(rec);
        }
    }
    return records;
}

std::vector<AggregateRecord> aggregate_by_m(std::span<const SweepRecord> records) {
    std::map<unsigned, std::vector<const SweepRecord*>> by_m;
    for (const auto& r : records) {
        by_m[r.m].push_back(&r);
    }
    std::vector<AggregateRecord> out;
    out.reserve(by_m.size());
    for (const auto& [m, group] : by_m) {
        AggregateRecord agg;
        agg.m = m;
        agg.samples = group.size();
        for (const auto* r : group) {
            agg.rate_mean += r->rate;
            agg.ratio_mean += r->ratio_percent;
        }
        agg.rate_mean /= static_cast<double>(group.size());
        agg.ratio_mean /= static_cast<double>(group.size());
        if (group.size() >= 2) {
            double vr = 0.0;
            double vq = 0.0;
            for (const auto* r : group) {
                vr += (r->rate - agg.rate_mean) * (r->rate - agg.rate_mean);
                vq += (r->ratio_percent - agg.ratio_mean) * (r->ratio_percent - agg.ratio_mean);
            }
            agg.rate_sd = std::sqrt(vr / static_cast<double>(group.size() - 1));
            agg.ratio_sd = std::sqrt(vq / static_cast<double>(group.size() - 1));
        }
        out.push_back(agg);
    }
    return out;
}

std::string to_csv(std::span<const SweepRecord> records) {
    std::string out = "m,n,q,seed,model,qc_nonopt,qc_opt,rate,ratio_percent\n";
    for (const auto& r : records) {
        out += std::to_string(r.m) + ',' + std::to_string(r.n) + ',' + std::to_string(r.q) +
               ',' + std::to_string(r.seed) + ',' + to_string(r.model) + ',' +
               std::to_string(r.qc_nonopt) + ',' + std::to_string(r.qc_opt) + ',' +
               fmt6(r.rate) + ',' + fmt6(r.ratio_percent) + '\n';
    }
    return out;
}

std::string to_csv(std::span<const AggregateRecord> records) {
    std::string out = "m,samples,rate_mean,rate_sd,ratio_mean,ratio_sd\n";
    for (const auto& r : records) {
        out += std::to_string(r.m) + ',' + std::to_string(r.samples) + ',' + fmt6(r.rate_mean) +
               ',' + fmt6(r.rate_sd) + ',' + fmt6(r.ratio_mean) + ',' + fmt6(r.ratio_sd) + '\n';
    }
    return out;
}

std::string to_json(std::span<const SweepRecord> records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        arr.push_back({
            {"m", r.m},
            {"n", r.n},
            {"q", r.q},
            {"seed", r.seed},
            {"model", to_string(r.model)},
            {"qc_nonopt", r.qc_nonopt},
            {"qc_opt", r.qc_opt},
            {"rate", round6(r.rate)},
            {"ratio_percent", round6(r.ratio_percent)},
        });
    }
    return arr.dump(2) + "\n";
}

std::string to_json(std::span<const AggregateRecord> records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        arr.push_back({
            {"m", r.m},
            {"samples", r.samples},
            {"rate_mean", round6(r.rate_mean)},
            {"rate_sd", round6(r.rate_sd)},
            {"ratio_mean", round6(r.ratio_mean)},
            {"ratio_sd", round6(r.ratio_sd)},
        });
    }
    return arr.dump(2) + "\n";
}

} // namespace neqr
