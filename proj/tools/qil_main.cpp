#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qil/analysis.hpp"
#include "qil/corpus.hpp"
#include "qil/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

qil::CircuitDocument load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return qil::parse_circuit(ss.str());
    } catch (const qil::ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

template <class Report>
void emit(const Report& r, bool json) {
    if (json) std::cout << qil::report::to_json(r).dump(2) << "\n";
    else std::cout << qil::report::to_text(r);
}

int input_error(const std::string& message, bool json) {
    if (json) std::cout << nlohmann::json{{"schema", qil::report::kSchemaVersion}, {"error", message}}.dump(2) << "\n";
    std::cerr << "qil: " << message << "\n";
    return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qubit information logic: parity equations over the c and h bases"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit a JSON report");

    std::string analyze_file;
    auto* analyze = app.add_subcommand("analyze", "Derive equations, correlation table and classes");
    analyze->add_option("FILE", analyze_file)->required();
    analyze->add_flag("--json", json, "Emit a JSON report");

    std::string verify_file;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "Cross-check every symbolic claim against the statevector");
    verify->add_option("FILE", verify_file)->required();
    verify->add_option("--trials", trials, "Random-basis trials per all-basis claim")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Seed for the random bases");
    verify->add_flag("--json", json, "Emit a JSON report");

    std::string dual_a, dual_b;
    auto* duality = app.add_subcommand("duality", "Check whether H on every qubit maps A onto B");
    duality->add_option("FILE_A", dual_a)->required();
    duality->add_option("FILE_B", dual_b)->required();
    duality->add_flag("--json", json, "Emit a JSON report");

    auto* corpus = app.add_subcommand("corpus", "Run the built-in scenarios");
    corpus->add_flag("--json", json, "Emit a JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            const auto r = qil::run_analyze(load(analyze_file));
            emit(r, json);
            return r.ok() ? kOk : kInputError;
        }
        if (*verify) {
            const auto r = qil::run_verify(load(verify_file), trials, seed);
            emit(r, json);
            return r.passed() ? kOk : kMismatch;
        }
        if (*duality) {
            const auto r = qil::run_duality(load(dual_a), load(dual_b));
            emit(r, json);
            return r.consistent ? kOk : kMismatch;
        }
        const auto r = qil::corpus::run_corpus();
        emit(r, json);
        return r.passed() ? kOk : kMismatch;
    } catch (const InputError& e) {
        return input_error(e.what(), json);
    }
}
