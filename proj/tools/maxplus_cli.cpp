// maxplus: command-line front end for the max-plus switched-system analyzer.
//
//   maxplus eig FILE [--json] [--max-transient N]
//   maxplus irreducible FILE [--json]
//   maxplus switched SCHEDULE MATRIX... [--json] [--max-transient N]
//   maxplus simulate SCHEDULE MATRIX... [--horizon N] [--x0 a,b,...] [--csv PATH] [--json]
//   maxplus probe A B [--json]
//   maxplus probe --random N COUNT [--seed S] [--json]
//
// MATRIX arguments are "name=path" or a bare path whose file stem is the name.
// Exit codes: 0 success, 1 domain failure, 2 input failure, 3 internal error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxplus/errors.hpp"
#include "maxplus/io.hpp"
#include "maxplus/random.hpp"
#include "maxplus/simulation.hpp"
#include "maxplus/spectral.hpp"
#include "maxplus/switched.hpp"

namespace {

using json = nlohmann::json;
using namespace maxplus;

constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

// Thrown to report a domain failure that is not an exception in the library.
struct DomainFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    unsigned long max_transient = kDefaultTransientCap;
    unsigned long horizon = 0;
    std::string x0;
    std::string csv;
    unsigned long long seed = 1;
    std::vector<std::size_t> random;  // {n, count}
    std::vector<std::string> files;
    std::string schedule;
};

std::string rational_text(const Rational& q) { return to_string(q); }

json vector_json(const Vector& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json nodes_json(const std::vector<std::size_t>& nodes) {
    json out = json::array();
    for (auto v : nodes) out.push_back(v + 1);
    return out;
}

std::string circuit_text(const std::vector<std::size_t>& nodes) {
    std::string out;
    for (auto v : nodes) out += std::to_string(v + 1) + " -> ";
    return out + std::to_string(nodes.front() + 1);
}

std::string indent(const std::string& block) {
    std::string out;
    std::istringstream in(block);
    for (std::string line; std::getline(in, line);) out += "  " + line + "\n";
    return out;
}

std::pair<std::string, Matrix> load_named_matrix(const std::string& arg) {
    std::string name;
    std::filesystem::path path;
    if (auto eq = arg.find('='); eq != std::string::npos && eq > 0) {
        name = arg.substr(0, eq);
        path = arg.substr(eq + 1);
    } else {
        path = arg;
        name = path.stem().string();
    }
    return {name, read_matrix_file(path)};
}

MatrixMap load_matrices(const std::vector<std::string>& args) {
    MatrixMap out;
    for (const auto& arg : args) {
        auto [name, m] = load_named_matrix(arg);
        out.insert_or_assign(name, std::move(m));
    }
    return out;
}

int cmd_eig(const Options& opt) {
    const auto a = read_matrix_file(opt.files.at(0));
    const auto r = spectral_analysis(a, opt.max_transient);
    if (opt.json) {
        json out = {{"n", a.size()},
                    {"lambda", rational_text(r.lambda)},
                    {"critical_circuit", nodes_json(r.critical_circuit)},
                    {"eigenvector", vector_json(r.eigenvector)},
                    {"period", r.period},
                    {"transient", r.transient}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "lambda = " << rational_text(r.lambda) << " (" << Scalar(r.lambda).to_decimal() << ")\n"
              << "critical circuit: " << circuit_text(r.critical_circuit) << "\n"
              << "eigenvector = " << r.eigenvector.to_string() << "\n"
              << "d = " << r.period << "\n"
              << "k0 = " << r.transient << "\n";
    return 0;
}

int cmd_irreducible(const Options& opt) {
    const auto a = read_matrix_file(opt.files.at(0));
    const bool irreducible = is_irreducible(a);
    const auto components = strongly_connected_components(a);
    if (opt.json) {
        json comps = json::array();
        for (const auto& c : components) comps.push_back(nodes_json(c));
        json out = {{"irreducible", irreducible}, {"components", comps}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "irreducible = " << (irreducible ? "true" : "false") << "\n";
    if (!irreducible) {
        std::cout << "components:";
        for (const auto& c : components) {
            std::cout << " {";
            for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? "," : "") << c[i] + 1;
            std::cout << "}";
        }
        std::cout << "\n";
    }
    return 0;
}

json switched_json(const SwitchedSpectral& s) {
    return {{"composed", matrix_json(s.composed)},
            {"cycle_length", s.cycle_length},
            {"composed_lambda", rational_text(s.composed_spectral.lambda)},
            {"composed_period", s.composed_spectral.period},
            {"composed_transient", s.composed_spectral.transient},
            {"lambda_per_step", rational_text(s.lambda_per_step)},
            {"period", s.period},
            {"transient", s.transient},
            {"sufficient_condition", s.sufficient_condition}};
}

void print_switched(const SwitchedSpectral& s) {
    std::cout << "composed matrix (one switching cycle, K = " << s.cycle_length << "):\n"
              << indent(to_string(s.composed)) << "composed lambda = " << rational_text(s.composed_spectral.lambda)
              << "\n"
              << "lambda_per_step = " << rational_text(s.lambda_per_step) << " ("
              << Scalar(s.lambda_per_step).to_decimal() << ")\n"
              << "period d = " << s.period << "\n"
              << "transient k0 = " << s.transient << "\n"
              << "finite-diagonal sufficient condition held: " << (s.sufficient_condition ? "yes" : "no") << "\n";
}

int cmd_switched(const Options& opt) {
    const auto schedule = read_schedule_file(opt.schedule);
    const auto matrices = load_matrices(opt.files);
    const auto s = switched_analysis(schedule, matrices, opt.max_transient);
    if (opt.json)
        std::cout << switched_json(s).dump(2) << "\n";
    else
        print_switched(s);
    return 0;
}

int cmd_simulate(const Options& opt) {
    const auto schedule = read_schedule_file(opt.schedule);
    const auto matrices = load_matrices(opt.files);
    const auto first = matrices.find(schedule.phases().front().matrix);
    if (first == matrices.end())
        throw UnknownMatrixName("unknown matrix name '" + schedule.phases().front().matrix + "'");
    const Vector x0 = opt.x0.empty() ? Vector(first->second.size(), Scalar::zero()) : parse_vector(opt.x0);

    const auto cv = cross_validate(schedule, matrices, x0, opt.horizon, opt.max_transient);
    if (!opt.csv.empty()) {
        std::ofstream out(opt.csv);
        if (!out) throw ParseError(opt.csv, 0, 0, "cannot write CSV file");
        out << trace_to_csv(simulate(schedule, matrices, x0, cv.horizon));
    }

    const auto& e = cv.empirical;
    if (opt.json) {
        json out = {{"spectral", switched_json(cv.spectral)},
                    {"empirical",
                     {{"detected", e.detected},
                      {"period", e.period},
                      {"lambda_per_step", rational_text(e.lambda_per_step)},
                      {"transient", e.transient}}},
                    {"horizon", cv.horizon},
                    {"agree", cv.agree},
                    {"diagnostics", cv.diagnostics}};
        std::cout << out.dump(2) << "\n";
    } else {
        auto row = [](const std::string& label, const std::string& spectral, const std::string& empirical) {
            std::cout << std::left << std::setw(17) << label << std::setw(12) << spectral << empirical << "\n";
        };
        const std::string none = "-";
        std::cout << "horizon = " << cv.horizon << "\n";
        row("", "spectral", "empirical");
        row("lambda_per_step", rational_text(cv.spectral.lambda_per_step),
            e.detected ? rational_text(e.lambda_per_step) : none);
        row("period d", std::to_string(cv.spectral.period), e.detected ? std::to_string(e.period) : none);
        row("transient k0", std::to_string(cv.spectral.transient), e.detected ? std::to_string(e.transient) : none);
        std::cout << "agree = " << (cv.agree ? "true" : "false") << "\n";
        if (!cv.diagnostics.empty()) std::cout << "note: " << cv.diagnostics << "\n";
    }
    if (!cv.agree) throw DomainFailure("spectral prediction and simulation disagree: " + cv.diagnostics);
    return 0;
}

int cmd_probe(const Options& opt) {
    if (!opt.random.empty()) {
        const std::size_t n = opt.random.at(0);
        const std::size_t count = opt.random.at(1);
        if (n == 0) throw DimensionMismatch("matrix dimension must be positive");
        std::mt19937_64 rng(opt.seed);
        RandomMatrixOptions gen;
        gen.n = n;
        gen.finite_diagonal = true;
        std::size_t greater = 0, equal = 0, less = 0, skipped = 0;
        for (std::size_t i = 0; i < count; ++i) {
            const auto a = random_irreducible_matrix(rng, gen);
            const auto b = random_irreducible_matrix(rng, gen);
            if (!is_irreducible(otimes(a, b))) {
                ++skipped;
                continue;
            }
            switch (eigenvalue_relation_probe(a, b).comparison) {
                case Comparison::Greater: ++greater; break;
                case Comparison::Equal: ++equal; break;
                case Comparison::Less: ++less; break;
            }
        }
        if (opt.json) {
            json out = {{"n", n},     {"count", count}, {"seed", opt.seed}, {"greater", greater},
                        {"equal", equal}, {"less", less},   {"skipped", skipped}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "n = " << n << ", pairs = " << count << ", seed = " << opt.seed << "\n"
                      << "lambda(AB) >  lambda(A) + lambda(B): " << greater << "\n"
                      << "lambda(AB) =  lambda(A) + lambda(B): " << equal << "\n"
                      << "lambda(AB) <  lambda(A) + lambda(B): " << less << "\n"
                      << "skipped (reducible product): " << skipped << "\n";
        }
        return 0;
    }

    if (opt.files.size() != 2) throw CLI::ValidationError("probe", "expects two matrix files or --random N COUNT");
    const auto a = read_matrix_file(opt.files[0]);
    const auto b = read_matrix_file(opt.files[1]);
    const auto r = eigenvalue_relation_probe(a, b);
    if (opt.json) {
        json out = {{"lambda_a", rational_text(r.lambda_a)},
                    {"lambda_b", rational_text(r.lambda_b)},
                    {"lambda_ab", rational_text(r.lambda_ab)},
                    {"comparison", to_symbol(r.comparison)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "lambda(A) = " << rational_text(r.lambda_a) << "\n"
                  << "lambda(B) = " << rational_text(r.lambda_b) << "\n"
                  << "lambda(AB) = " << rational_text(r.lambda_ab) << "\n"
                  << "lambda(AB) " << to_symbol(r.comparison) << " lambda(A) + lambda(B) = "
                  << rational_text(Rational(r.lambda_a + r.lambda_b)) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact max-plus analysis of switched discrete event systems"};
    app.require_subcommand(1);
    Options opt;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Machine-readable output"); };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--max-transient", opt.max_transient, "Power-iteration cap for period/transient search");
    };

    auto* eig = app.add_subcommand("eig", "Eigenvalue, eigenvector, period and transient of a matrix");
    eig->add_option("file", opt.files, "Matrix file")->required()->expected(1);
    add_json(eig);
    add_cap(eig);

    auto* irr = app.add_subcommand("irreducible", "Irreducibility test with strongly connected components");
    irr->add_option("file", opt.files, "Matrix file")->required()->expected(1);
    add_json(irr);

    auto* sw = app.add_subcommand("switched", "Cycle time of a periodically switched system");
    sw->add_option("schedule", opt.schedule, "Schedule file")->required();
    sw->add_option("matrices", opt.files, "Matrix files (name=path or path)")->required();
    add_json(sw);
    add_cap(sw);

    auto* sim = app.add_subcommand("simulate", "Simulate a switched system and cross-check the prediction");
    sim->add_option("schedule", opt.schedule, "Schedule file")->required();
    sim->add_option("matrices", opt.files, "Matrix files (name=path or path)")->required();
    sim->add_option("--horizon", opt.horizon, "Number of steps (default: derived from the spectral transient)");
    sim->add_option("--x0", opt.x0, "Initial state as comma-separated tokens (default: all zeros)");
    sim->add_option("--csv", opt.csv, "Write the trajectory to this CSV file");
    add_json(sim);
    add_cap(sim);

    auto* probe = app.add_subcommand("probe", "Compare lambda(AB) with lambda(A) + lambda(B)");
    probe->add_option("files", opt.files, "Two matrix files A and B");
    probe->add_option("--random", opt.random, "Sample COUNT random pairs of size N")->expected(2);
    probe->add_option("--seed", opt.seed, "Seed for --random");
    add_json(probe);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*eig) return cmd_eig(opt);
        if (*irr) return cmd_irreducible(opt);
        if (*sw) return cmd_switched(opt);
        if (*sim) return cmd_simulate(opt);
        if (*probe) return cmd_probe(opt);
    } catch (const NotIrreducible& e) {
        std::cerr << "NotIrreducible: " << e.what() << "\n";
        return kExitDomain;
    } catch (const TransientBoundExceeded& e) {
        std::cerr << "TransientBoundExceeded: " << e.what() << "\n";
        return kExitDomain;
    } catch (const DomainFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ParseError& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return kExitInput;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NoEigenvectorColumn& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const TheoremViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
