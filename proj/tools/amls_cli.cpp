#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "amls/bound.hpp"
#include "amls/errors.hpp"
#include "amls/format.hpp"
#include "amls/fvalue.hpp"
#include "amls/parallel.hpp"
#include "amls/scalar.hpp"
#include "amls/search/run.hpp"
#include "amls/spec_list.hpp"

namespace {

using amls::format_fixed;

std::vector<double> parse_betas(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double start, stop, step;
        char c1, c2;
        std::istringstream in(text);
        if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
            !(step > 0.0) || stop < start)
            throw std::invalid_argument("malformed beta range, expected start:stop:step");
        for (double b = start; b <= stop + 1e-9; b += step)
            out.push_back(std::min(b, stop));
    } else {
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, ',')) {
            if (item.empty()) continue;
            out.push_back(std::stod(item));
        }
    }
    if (out.empty()) throw std::invalid_argument("empty beta list");
    for (double b : out)
        if (!(b >= 1.0)) throw std::invalid_argument("every beta must be >= 1");
    return out;
}

std::vector<std::string> split_csv_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// Benchmark-2 value for a spec list: the best prior-work base obtainable by
// treating an eligible oracle (alpha <= beta, c > 1) as a beta-oracle.
std::optional<double> esa_benchmark(const amls::SpecList& specs, double beta) {
    std::optional<double> best;
    for (const auto& s : specs) {
        if (s.alpha > beta + 1e-12 || s.c <= 1.0) continue;
        const double v = amls::esaamlsbound(beta, s.c);
        if (!best || v < *best) best = v;
    }
    return best;
}

std::string spec_label(const amls::OracleSpec& s) {
    std::ostringstream out;
    out << s.alpha << '/' << s.c;
    return out.str();
}

int cmd_compute(const std::string& spec_file, double alpha, double c, double beta,
                double eps, bool json) {
    amls::SpecList specs = spec_file.empty()
        ? amls::SpecList::single(alpha, c)
        : amls::load_spec_file(spec_file);
    const amls::BoundResult r = amls::amlsbound(specs, beta, eps);
    if (json) {
        nlohmann::ordered_json out;
        out["d"] = r.d;
        out["ln_d"] = r.ln_d;
        out["kappa_star"] = r.kappa_star;
        auto active = nlohmann::ordered_json::array();
        for (const auto& s : r.active_specs) active.push_back({s.alpha, s.c});
        out["active"] = active;
        out["eps"] = r.eps;
        out["iterations"] = r.iterations;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "d=" << format_fixed(r.d, amls::decimals_for_eps(eps)) << "\n";
    }
    return 0;
}

int cmd_table(const std::string& spec_file, const std::string& betas_text,
              double eps, const std::string& columns_text) {
    const amls::SpecList specs = amls::load_spec_file(spec_file);
    const std::vector<double> betas = parse_betas(betas_text);
    const std::vector<std::string> columns = split_csv_list(columns_text);
    for (const auto& col : columns) {
        if (col != "d" && col != "kappa_star" && col != "brute" && col != "esa" &&
            col != "active_oracle")
            throw std::invalid_argument("unknown column: " + col);
    }

    std::vector<amls::BoundResult> results(betas.size());
    amls::parallel_for(static_cast<long>(betas.size()), [&](long i) {
        results[i] = amls::amlsbound(specs, betas[i], eps);
    });

    std::string header = "beta";
    for (const auto& col : columns) header += "," + col;
    std::cout << header << "\n";
    for (std::size_t i = 0; i < betas.size(); ++i) {
        std::string line = format_fixed(betas[i], 6);
        for (const auto& col : columns) {
            line += ",";
            if (col == "d") {
                line += format_fixed(results[i].d, 6);
            } else if (col == "kappa_star") {
                line += format_fixed(results[i].kappa_star, 6);
            } else if (col == "brute") {
                line += format_fixed(amls::brute_bound(betas[i]), 6);
            } else if (col == "esa") {
                const auto v = esa_benchmark(specs, betas[i]);
                line += v ? format_fixed(*v, 6) : "nan";
            } else { // active_oracle
                std::string cell;
                for (const auto& s : results[i].active_specs) {
                    if (!cell.empty()) cell += ';';
                    cell += spec_label(s);
                }
                line += cell;
            }
        }
        std::cout << line << "\n";
    }
    return 0;
}

int cmd_curve(const std::string& spec_file, const std::string& betas_text,
              double eps, const std::string& include_text) {
    const amls::SpecList specs = amls::load_spec_file(spec_file);
    const std::vector<double> betas = parse_betas(betas_text);
    const std::vector<std::string> include = split_csv_list(include_text);
    bool with_brute = false, with_esa = false;
    for (const auto& inc : include) {
        if (inc == "brute") with_brute = true;
        else if (inc == "esa") with_esa = true;
        else throw std::invalid_argument("unknown series: " + inc);
    }

    const std::size_t s_count = specs.size();
    std::vector<std::vector<double>> series(betas.size());
    amls::parallel_for(static_cast<long>(betas.size()), [&](long i) {
        std::vector<double> row;
        for (const auto& s : specs)
            row.push_back(amls::amlsbound(amls::SpecList::single(s.alpha, s.c),
                                          betas[i], eps).d);
        if (s_count > 1) row.push_back(amls::amlsbound(specs, betas[i], eps).d);
        series[i] = std::move(row);
    });

    std::string header = "beta";
    for (const auto& s : specs) {
        std::ostringstream name;
        name << ",d_a" << s.alpha << "_c" << s.c;
        header += name.str();
    }
    if (s_count > 1) header += ",combined";
    if (with_brute) header += ",brute";
    if (with_esa) header += ",esa";
    std::cout << header << "\n";

    for (std::size_t i = 0; i < betas.size(); ++i) {
        std::string line = format_fixed(betas[i], 6);
        for (double v : series[i]) line += "," + format_fixed(v, 6);
        if (with_brute) line += "," + format_fixed(amls::brute_bound(betas[i]), 6);
        if (with_esa) {
            const auto v = esa_benchmark(specs, betas[i]);
            line += ",";
            line += v ? format_fixed(*v, 6) : "nan";
        }
        std::cout << line << "\n";
    }
    return 0;
}

int cmd_fvalue(const std::string& spec_file, double beta, long n, bool exact,
               bool trace) {
    const amls::SpecList specs = amls::load_spec_file(spec_file);
    if (exact && n > 60)
        throw std::invalid_argument("--exact supports n <= 60 only");
    const amls::FEval f = amls::f_value(
        specs, beta, n,
        exact ? amls::TailValue::Mode::exact_rational : amls::TailValue::Mode::log_float);
    std::cout << "ln_f=" << format_fixed(f.log_value, 6)
              << " base=" << format_fixed(amls::base_estimate(f), 6)
              << " k*=" << f.argmax_k << "\n";
    if (trace) {
        for (const auto& rec : f.per_k) {
            std::cout << "k=" << rec.k << " alpha=" << rec.spec.alpha
                      << " c=" << rec.spec.c << " t=" << rec.t
                      << " ln_term=" << format_fixed(rec.log_term, 6) << "\n";
        }
    }
    return 0;
}

int cmd_simulate(const std::string& spec_file, int n, int k, double beta,
                 long trials, std::uint64_t seed, bool deterministic,
                 const std::string& log_path) {
    const amls::SpecList specs = amls::load_spec_file(spec_file);
    if (n < 1 || n > 64) throw std::invalid_argument("need 1 <= n <= 64");
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    if (static_cast<double>(k) > n / beta + 1e-9)
        throw std::invalid_argument("infeasible planting: k > n/beta");
    if (trials < 1) throw std::invalid_argument("need at least one trial");

    struct Trial {
        bool success = false;
        double cost = 0.0;
        bool truncated = false;
        std::vector<amls::QueryRecord> log;
    };
    std::vector<Trial> results(trials);

    amls::parallel_for(trials, [&](long trial) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
        const amls::PlantedInstance inst =
            amls::PlantedInstance::random(n, k, beta, trial_seed);
        std::vector<amls::ExtensionOracleHandle> oracles;
        for (const auto& s : specs)
            oracles.push_back(amls::make_planted_oracle(inst, s));
        const amls::RunResult run = deterministic
            ? amls::det_amls_run(inst, specs, oracles)
            : amls::amls_run(inst, specs, oracles, amls::SplitMix64(trial_seed).next());
        Trial& out = results[trial];
        out.success = run.size <= amls::floor_index(beta * k);
        out.cost = run.ledger.oracle_cost;
        out.truncated = run.truncated;
        out.log = run.query_log;
    });

    long successes = 0;
    double cost_sum = 0.0, cost_max = 0.0;
    bool truncated = false;
    for (const auto& t : results) {
        successes += t.success ? 1 : 0;
        cost_sum += t.cost;
        cost_max = std::max(cost_max, t.cost);
        truncated |= t.truncated;
    }
    std::cout << "trials=" << trials
              << " success=" << format_fixed(static_cast<double>(successes) / trials, 6)
              << " mean_cost=" << format_fixed(cost_sum / trials, 6)
              << " max_cost=" << format_fixed(cost_max, 6)
              << " truncated=" << (truncated ? 1 : 0) << "\n";

    if (!log_path.empty()) {
        std::ofstream log_out(log_path);
        if (!log_out) throw std::invalid_argument("cannot open log file: " + log_path);
        std::vector<amls::QueryRecord> all;
        for (const auto& t : results)
            all.insert(all.end(), t.log.begin(), t.log.end());
        amls::write_query_log_csv(log_out, all);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal exponential-time approximation bases for monotone subset minimization"};
    app.require_subcommand(1);

    std::string spec_file, betas_text, columns = "d", include, log_path;
    double alpha = 0.0, c = 0.0, beta = 1.0, eps = 1e-6;
    long n = 1, trials = 100;
    int sim_n = 8, sim_k = 2;
    std::uint64_t seed = 1;
    bool json = false, exact = false, trace = false, deterministic = false;

    auto* compute = app.add_subcommand("compute", "single bestbound value");
    compute->add_option("--alpha", alpha);
    compute->add_option("--c", c);
    compute->add_option("--spec", spec_file);
    compute->add_option("--beta", beta)->required();
    compute->add_option("--eps", eps);
    compute->add_flag("--json", json);

    auto* table = app.add_subcommand("table", "CSV table over a beta range");
    table->add_option("--spec", spec_file)->required();
    table->add_option("--betas", betas_text)->required();
    table->add_option("--eps", eps);
    table->add_option("--columns", columns);

    auto* curve = app.add_subcommand("curve", "per-oracle curve data for plotting");
    curve->add_option("--spec", spec_file)->required();
    curve->add_option("--betas", betas_text)->required();
    curve->add_option("--eps", eps);
    curve->add_option("--include", include);

    auto* fvalue = app.add_subcommand("fvalue", "discrete max-min cost f(n)");
    fvalue->add_option("--spec", spec_file)->required();
    fvalue->add_option("--beta", beta)->required();
    fvalue->add_option("--n", n)->required();
    fvalue->add_flag("--exact", exact);
    fvalue->add_flag("--trace", trace);

    auto* simulate = app.add_subcommand("simulate", "planted-instance search campaign");
    simulate->add_option("--n", sim_n)->required();
    simulate->add_option("--k", sim_k)->required();
    simulate->add_option("--beta", beta)->required();
    simulate->add_option("--spec", spec_file)->required();
    simulate->add_option("--trials", trials);
    simulate->add_option("--seed", seed);
    simulate->add_flag("--deterministic", deterministic);
    simulate->add_option("--log", log_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) {
            if (spec_file.empty() && !(alpha >= 1.0 && c >= 1.0))
                throw std::invalid_argument("provide --spec or both --alpha and --c (each >= 1)");
            if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
            return cmd_compute(spec_file, alpha, c, beta, eps, json);
        }
        if (table->parsed()) return cmd_table(spec_file, betas_text, eps, columns);
        if (curve->parsed()) return cmd_curve(spec_file, betas_text, eps, include);
        if (fvalue->parsed()) return cmd_fvalue(spec_file, beta, n, exact, trace);
        if (simulate->parsed())
            return cmd_simulate(spec_file, sim_n, sim_k, beta, trials, seed,
                                deterministic, log_path);
    } catch (const amls::tolerance_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
