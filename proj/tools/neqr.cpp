#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "neqr/circuit.hpp"
#include "neqr/error.hpp"
#include "neqr/fit.hpp"
#include "neqr/image.hpp"
#include "neqr/kernels.hpp"
#include "neqr/metrics.hpp"
#include "neqr/transform.hpp"
#include "neqr/verify.hpp"

namespace {

struct ImageSource {
    std::string path;
    std::vector<uint64_t> random_spec; // n q seed
};

// Every image-consuming command accepts exactly one of: a PGM path, or a
// seeded random image.
void add_image_source(CLI::App* cmd, ImageSource& src) {
    auto* grp = cmd->add_option_group("image source");
    grp->add_option("image", src.path, "PGM file, P2 or P5");
    grp->add_option("--random", src.random_spec,
                    "generate a random 2^n x 2^n q-bit image: N Q SEED")
        ->expected(3);
    grp->require_option(1);
}

neqr::GrayImage load_image(const ImageSource& src) {
    if (!src.random_spec.empty()) {
        return neqr::random_image(static_cast<unsigned>(src.random_spec[0]),
                                  static_cast<unsigned>(src.random_spec[1]),
                                  src.random_spec[2]);
    }
    std::ifstream in(src.path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + src.path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return neqr::parse_pgm(buf.str());
}

void apply_kernel(const std::string& kernel) {
    if (!neqr::kern::select(kernel)) {
        throw std::runtime_error("kernel '" + kernel + "' is not available on this CPU");
    }
}

neqr::CostModel parse_model(const std::string& model) {
    return model == "reset" ? neqr::CostModel::McnotReset : neqr::CostModel::McnotPlain;
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double round6(double v) { return std::strtod(fmt6(v).c_str(), nullptr); }

struct CostFigures {
    unsigned m = 0;
    unsigned n = 0;
    unsigned q = 0;
    uint64_t qc_nonopt = 0;
    uint64_t qc_opt = 0;
    double rate = 0.0;
    double ratio_percent = 0.0;
};

CostFigures cost_figures(const neqr::GrayImage& img, neqr::CostModel model, bool polarity_x) {
    const neqr::ImagePlanes planes = neqr::extract_planes(img);
    CostFigures fig;
    fig.m = 2 * img.n;
    fig.n = img.n;
    fig.q = img.q;
    {
        const neqr::Circuit esop = neqr::synthesize_esop(planes);
        fig.qc_nonopt = neqr::circuit_cost(esop, model, polarity_x);
    }
    {
        const neqr::Circuit pprm = neqr::synthesize_pprm(planes);
        fig.qc_opt = neqr::circuit_cost(pprm, model, polarity_x);
    }
    fig.rate = neqr::optimization_rate(fig.qc_nonopt, fig.qc_opt);
    fig.ratio_percent = neqr::compression_ratio(fig.qc_nonopt, fig.qc_opt);
    return fig;
}

int run_cost(const ImageSource& src, const std::string& model_name, bool polarity_x,
             const std::string& format) {
    const neqr::CostModel model = parse_model(model_name);
    const CostFigures fig = cost_figures(load_image(src), model, polarity_x);
    if (format == "json") {
        nlohmann::json obj{
            {"m", fig.m},
            {"n", fig.n},
            {"q", fig.q},
            {"model", to_string(model)},
            {"qc_nonopt", fig.qc_nonopt},
            {"qc_opt", fig.qc_opt},
            {"rate", round6(fig.rate)},
            {"ratio_percent", round6(fig.ratio_percent)},
        };
        std::cout << obj.dump(2) << '\n';
    } else {
        std::cout << "m,n,q,model,qc_nonopt,qc_opt,rate,ratio_percent\n"
                  << fig.m << ',' << fig.n << ',' << fig.q << ',' << to_string(model) << ','
                  << fig.qc_nonopt << ',' << fig.qc_opt << ',' << fmt6(fig.rate) << ','
                  << fmt6(fig.ratio_percent) << '\n';
    }
    return 0;
}

int run_verify(const ImageSource& src, const std::string& corrupt) {
    const neqr::GrayImage img = load_image(src);
    if (img.n > 8) {
        throw std::runtime_error("n=" + std::to_string(img.n) +
                                 " exceeds the exhaustive verification bound n <= 8");
    }
    neqr::ImagePlanes planes = neqr::extract_planes(img);
    const neqr::Circuit esop = neqr::synthesize_esop(planes);

    if (!corrupt.empty()) {
        // Test hook: flip one plane bit before the optimizing synthesis so
        // the two circuits genuinely disagree at that coordinate.
        unsigned plane = 0;
        unsigned long long coord = 0;
        if (std::sscanf(corrupt.c_str(), "%u,%llu", &plane, &coord) != 2 ||
            plane >= img.q || coord >= img.pixel_count()) {
            throw std::runtime_error("--corrupt expects PLANE,COORD within the image");
        }
        planes.planes[plane].flip(coord);
    }
    const neqr::Circuit pprm = neqr::synthesize_pprm(planes);

    const neqr::EquivalenceReport report = neqr::equivalent(esop, pprm);
    if (report.equivalent) {
        std::cout << "EQUIVALENT\n";
        return 0;
    }
    const auto& cx = *report.counterexample;
    const uint64_t y = cx.coordinate >> img.n;
    const uint64_t x = cx.coordinate & ((uint64_t{1} << img.n) - 1);
    std::cout << "NOT EQUIVALENT plane=" << cx.plane << " Y=" << y << " X=" << x << '\n';
    return 1;
}

int run_sweep(const std::string& range, unsigned q, unsigned seed_count,
              const std::string& model_name, const std::string& format, bool aggregate) {
    unsigned n_min = 0;
    unsigned n_max = 0;
    if (std::sscanf(range.c_str(), "%u..%u", &n_min, &n_max) != 2) {
        if (std::sscanf(range.c_str(), "%u", &n_min) == 1 &&
            range.find("..") == std::string::npos) {
            n_max = n_min;
        } else {
            throw std::runtime_error("--n-range expects A..B, got '" + range + "'");
        }
    }
    std::vector<uint64_t> seeds(seed_count);
    for (unsigned i = 0; i < seed_count; ++i) {
        seeds[i] = i;
    }
    const auto records = neqr::sweep(n_min, n_max, q, seeds, parse_model(model_name));
    if (aggregate) {
        const auto aggs = neqr::aggregate_by_m(records);
        std::cout << (format == "json" ? neqr::to_json(aggs) : neqr::to_csv(aggs));
    } else {
        std::cout << (format == "json" ? neqr::to_json(records) : neqr::to_csv(records));
    }
    return 0;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    return fields;
}

int run_fit(const std::string& family_name, const std::string& column,
            const std::string& input, const std::vector<double>& init,
            bool negative_amplitude) {
    std::string text;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(input);
        if (!in) {
            throw std::runtime_error("cannot open " + input);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    const std::string wanted = column == "ratio" ? "ratio_percent" : "rate";
    std::istringstream lines(text);
    std::string line;
    if (!std::getline(lines, line)) {
        throw std::runtime_error("empty fit input");
    }
    const auto header = split_csv_line(line);
    size_t m_col = header.size();
    size_t y_col = header.size();
    for (size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "m") m_col = i;
        if (header[i] == wanted) y_col = i;
    }
    if (m_col == header.size() || y_col == header.size()) {
        throw std::runtime_error("fit input has no 'm' and '" + wanted + "' columns");
    }

    std::vector<neqr::FitPoint> points;
    size_t lineno = 1;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            throw std::runtime_error("fit input line " + std::to_string(lineno) +
                                     " has wrong field count");
        }
        try {
            points.push_back({std::stod(fields[m_col]), std::stod(fields[y_col])});
        } catch (const std::exception&) {
            throw std::runtime_error("fit input line " + std::to_string(lineno) +
                                     " is not numeric");
        }
    }

    const neqr::FitFamily family =
        family_name == "decay" ? neqr::FitFamily::DecayExp : neqr::FitFamily::GrowthExp;
    const double sign = negative_amplitude ? -1.0 : 1.0;
    const std::vector<double> initial =
        init.empty() ? neqr::default_initial(family, points) : init;

    const neqr::FitResult result = neqr::fit(points, family, initial, sign);

    nlohmann::json obj{
        {"family", family_name},
        {"params", result.model.params},
        {"rss", result.residual_sum_squares},
        {"iterations", result.iterations},
        {"converged", result.converged},
    };
    if (family == neqr::FitFamily::DecayExp) {
        obj["amplitude_sign"] = result.model.amplitude_sign;
    }
    std::cout << obj.dump(2) << '\n';
    return 0;
}

int run_export(const ImageSource& src, const std::string& form, const std::string& out) {
    const neqr::GrayImage img = load_image(src);
    const neqr::ImagePlanes planes = neqr::extract_planes(img);
    const neqr::Circuit circuit =
        form == "esop" ? neqr::synthesize_esop(planes) : neqr::synthesize_pprm(planes);
    const std::string text = neqr::export_qasm(circuit);
    if (out.empty() || out == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write " + out);
    }
    file << text;
    file.flush();
    if (!file.good()) {
        throw std::runtime_error("write failed for " + out);
    }
    return 0;
}

int run_info(const ImageSource& src) {
    const neqr::GrayImage img = load_image(src);
    const neqr::ImagePlanes planes = neqr::extract_planes(img);
    uint64_t total = 0;
    std::string per_plane;
    for (uint32_t i = 0; i < img.q; ++i) {
        const uint64_t pop = planes.planes[i].popcount();
        total += pop;
        if (i > 0) {
            per_plane += ',';
        }
        per_plane += std::to_string(pop);
    }
    std::cout << "n: " << img.n << '\n'
              << "q: " << img.q << '\n'
              << "side: " << img.side() << '\n'
              << "pixels: " << img.pixel_count() << '\n'
              << "set_bits_per_plane: " << per_plane << '\n'
              << "set_bits_total: " << total << '\n'
              << "kernel: " << neqr::kern::active().name << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"NEQR circuit synthesis and Reed-Muller optimization"};
    app.require_subcommand(1);
    // lets --kernel appear after the subcommand name too
    app.fallthrough();

    std::string kernel = "auto";
    app.add_option("--kernel", kernel, "force a compute kernel variant")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
        ->capture_default_str();

    ImageSource cost_src;
    std::string cost_model = "plain";
    bool cost_polarity = false;
    std::string cost_format = "csv";
    auto* cost = app.add_subcommand("cost", "price the minterm and Reed-Muller circuits");
    add_image_source(cost, cost_src);
    cost->add_option("--model", cost_model, "MCNOT cost model")
        ->check(CLI::IsMember({"plain", "reset"}))
        ->capture_default_str();
    cost->add_flag("--polarity-x", cost_polarity,
                   "also count the X gates that realize negative controls");
    cost->add_option("--format", cost_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    ImageSource verify_src;
    std::string verify_corrupt;
    auto* verify = app.add_subcommand("verify", "prove both circuits encode the same image");
    add_image_source(verify, verify_src);
    verify->add_option("--corrupt", verify_corrupt, "flip plane bit PLANE,COORD before optimizing")
        ->group("");

    std::string sweep_range = "1..3";
    unsigned sweep_q = 8;
    unsigned sweep_seeds = 20;
    std::string sweep_model = "plain";
    std::string sweep_format = "csv";
    bool sweep_aggregate = false;
    auto* sweep = app.add_subcommand("sweep", "cost random images over a range of orders");
    sweep->add_option("--n-range", sweep_range, "orders to sweep, A..B")->capture_default_str();
    sweep->add_option("--q", sweep_q, "bit depth")->capture_default_str();
    sweep->add_option("--seeds", sweep_seeds, "seeds 0..K-1 per order")->capture_default_str();
    sweep->add_option("--model", sweep_model, "MCNOT cost model")
        ->check(CLI::IsMember({"plain", "reset"}))
        ->capture_default_str();
    sweep->add_option("--format", sweep_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep->add_flag("--aggregate", sweep_aggregate, "emit per-m mean and sd instead of records");

    std::string fit_family;
    std::string fit_column = "rate";
    std::string fit_input = "-";
    std::vector<double> fit_init;
    bool fit_negative = false;
    auto* fit = app.add_subcommand("fit", "fit a model family to sweep CSV data");
    fit->add_option("--family", fit_family, "model family")
        ->check(CLI::IsMember({"growth", "decay"}))
        ->required();
    fit->add_option("--column", fit_column, "which sweep column to fit")
        ->check(CLI::IsMember({"rate", "ratio"}))
        ->capture_default_str();
    fit->add_option("--input", fit_input, "sweep CSV path, - for stdin")->capture_default_str();
    fit->add_option("--init", fit_init, "initial parameters")->expected(2, 4);
    fit->add_flag("--negative-amplitude", fit_negative,
                  "decay family with a negated power term");

    ImageSource export_src;
    std::string export_form = "pprm";
    std::string export_out;
    auto* export_cmd = app.add_subcommand("export", "emit the circuit as OpenQASM 3 text");
    add_image_source(export_cmd, export_src);
    export_cmd->add_option("--form", export_form, "which circuit to export")
        ->check(CLI::IsMember({"esop", "pprm"}))
        ->capture_default_str();
    export_cmd->add_option("--out", export_out, "output path, - or absent for stdout");

    ImageSource info_src;
    auto* info = app.add_subcommand("info", "describe an image and the active kernel");
    add_image_source(info, info_src);

    int exit_code = 0;
    cost->callback([&] {
        apply_kernel(kernel);
        exit_code = run_cost(cost_src, cost_model, cost_polarity, cost_format);
    });
    verify->callback([&] {
        apply_kernel(kernel);
        exit_code = run_verify(verify_src, verify_corrupt);
    });
    sweep->callback([&] {
        apply_kernel(kernel);
        exit_code = run_sweep(sweep_range, sweep_q, sweep_seeds, sweep_model, sweep_format,
                              sweep_aggregate);
    });
    fit->callback([&] {
        apply_kernel(kernel);
        exit_code = run_fit(fit_family, fit_column, fit_input, fit_init, fit_negative);
    });
    export_cmd->callback([&] {
        apply_kernel(kernel);
        exit_code = run_export(export_src, export_form, export_out);
    });
    info->callback([&] {
        apply_kernel(kernel);
        exit_code = run_info(info_src);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
