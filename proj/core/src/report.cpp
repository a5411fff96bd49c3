#include "qil/report.hpp"

#include <cstdio>
#include <sstream>

namespace qil::report {

using nlohmann::json;

namespace {

json classes_json(const std::vector<std::vector<std::size_t>>& classes) {
    json out = json::array();
    for (const auto& cls : classes) {
        json c = json::array();
        for (auto q : cls) c.push_back(q + 1);
        out.push_back(std::move(c));
    }
    return out;
}

std::string classes_text(const std::vector<std::vector<std::size_t>>& classes) {
    std::string out;
    for (const auto& cls : classes) {
        out += out.empty() ? "{" : " {";
        for (std::size_t k = 0; k < cls.size(); ++k) out += (k ? "," : "") + std::to_string(cls[k] + 1);
        out += "}";
    }
    return out;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string directive_text(const Directive& d) {
    if (const auto* m = std::get_if<MeasureDirective>(&d)) {
        std::string s = "measure " + std::to_string(m->qubit + 1) + " " + basis_char(m->basis);
        if (m->outcome) s += *m->outcome ? " 1" : " 0";
        return s;
    }
    const auto& p = std::get<PairDirective>(d);
    return "pair " + std::to_string(p.first + 1) + " " + std::to_string(p.second + 1);
}

void append_table(std::ostringstream& os, const std::vector<PairReport>& table) {
    os << pad("pair", 8) << pad("c", 40) << pad("h", 40) << pad("all-basis", 11) << "entangled\n";
    for (const auto& p : table) {
        os << pad("(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")", 8)
           << pad(to_string(p.c), 40) << pad(to_string(p.h), 40)
           << pad(p.all_basis_uncorrelated ? "yes" : "no", 11) << (p.qil_entangled ? "yes" : "no") << "\n";
    }
}

}  // namespace

json to_json(const CorrelationVerdict& v) {
    json conditioning = json::array();
    for (const auto& var : v.conditioning) conditioning.push_back(to_string(var));
    json out{{"pair", {v.first + 1, v.second + 1}},
             {"basis", std::string(1, basis_char(v.basis))},
             {"kind", to_string(v.kind)},
             {"conditioning", std::move(conditioning)},
             {"rhs", v.kind == CorrelationKind::PerfectlyCorrelated ? json(v.rhs ? 1 : 0) : json(nullptr)}};
    if (!v.reason.empty()) out["reason"] = v.reason;
    return out;
}

json to_json(const PairReport& p) {
    return {{"pair", {p.first + 1, p.second + 1}},
            {"c", to_json(p.c)},
            {"h", to_json(p.h)},
            {"all_basis_uncorrelated", p.all_basis_uncorrelated},
            {"qil_entangled", p.qil_entangled}};
}

json to_json(const AnalyzeReport& r) {
    json out{{"schema", kSchemaVersion}, {"command", "analyze"}, {"qubits", r.n}, {"coverage", r.coverage}};
    if (!r.error.empty()) out["error"] = r.error;
    if (r.system) {
        out["qie"] = r.system->to_string();
        json table = json::array();
        for (const auto& p : r.table) table.push_back(to_json(p));
        out["table"] = std::move(table);
        out["classes"] = classes_json(r.classes);
    }
    json script = json::array();
    for (const auto& step : r.script) {
        json s{{"directive", directive_text(step.directive)}};
        if (step.outcome) {
            s["outcome"] = *step.outcome ? 1 : 0;
            s["forced"] = step.forced;
        }
        if (step.pair) s["pair"] = to_json(*step.pair);
        if (!step.system_text.empty()) s["qie"] = step.system_text;
        script.push_back(std::move(s));
    }
    out["script"] = std::move(script);
    return out;
}

json to_json(const VerifyReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j{{"name", c.name}, {"passed", c.passed}};
        if (!c.passed && !c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    json out{{"schema", kSchemaVersion},
             {"command", "verify"},
             {"coverage", r.coverage},
             {"passed", r.passed()},
             {"checks", std::move(checks)}};
    if (const auto* f = r.first_failure()) out["first_failure"] = f->name;
    return out;
}

json to_json(const DualityReport& r) {
    json out{{"schema", kSchemaVersion},
             {"command", "duality"},
             {"dual", r.dual},
             {"symbolic", r.symbolic},
             {"consistent", r.consistent},
             {"reason", r.reason}};
    out["oracle_fidelity"] = r.oracle_fidelity ? json(*r.oracle_fidelity) : json(nullptr);
    return out;
}

json to_json(const corpus::CorpusReport& r) {
    json fixtures = json::array();
    for (const auto& o : r.outcomes) {
        json j{{"scenario", o.scenario},
               {"claim", o.claim},
               {"symbolic", o.symbolic},
               {"numeric", o.numeric},
               {"passed", o.passed()}};
        if (!o.detail.empty()) j["detail"] = o.detail;
        fixtures.push_back(std::move(j));
    }
    return {{"schema", kSchemaVersion},
            {"command", "corpus"},
            {"passed", r.passed()},
            {"failures", r.failures()},
            {"fixtures", std::move(fixtures)}};
}

std::string to_text(const AnalyzeReport& r) {
    std::ostringstream os;
    os << "qubits: " << r.n << "\n";
    if (!r.system) {
        os << "coverage: " << r.coverage << "\nerror: " << r.error << "\n";
        return os.str();
    }
    os << "qie: " << r.system->to_string() << "\n";
    if (!r.table.empty()) append_table(os, r.table);
    os << "classes: " << classes_text(r.classes) << "\n";
    if (!r.script.empty()) os << "script:\n";
    for (const auto& step : r.script) {
        os << "  " << directive_text(step.directive);
        if (step.outcome) os << " -> " << (*step.outcome ? 1 : 0) << (step.forced ? " (forced)" : " (free)");
        if (step.pair) os << " -> c: " << to_string(step.pair->c) << ", h: " << to_string(step.pair->h);
        if (!step.system_text.empty() && step.outcome) os << "\n    " << step.system_text;
        os << "\n";
    }
    if (!r.error.empty()) os << "error: " << r.error << "\n";
    return os.str();
}

std::string to_text(const VerifyReport& r) {
    std::ostringstream os;
    os << "symbolic coverage: " << r.coverage << "\n";
    std::size_t failed = 0;
    for (const auto& c : r.checks) {
        if (c.passed) continue;
        ++failed;
        os << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    os << r.checks.size() - failed << "/" << r.checks.size() << " checks passed\n";
    return os.str();
}

std::string to_text(const DualityReport& r) {
    std::ostringstream os;
    os << "dual: " << (r.dual ? "yes" : "no") << " (" << r.reason << ")\n";
    if (r.oracle_fidelity) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12f", *r.oracle_fidelity);
        os << "oracle fidelity: " << buf << "\n";
    }
    if (!r.consistent) os << "symbolic and oracle answers disagree\n";
    return os.str();
}

std::string to_text(const corpus::CorpusReport& r) {
    std::ostringstream os;
    for (const auto& o : r.outcomes) {
        os << (o.passed() ? "ok   " : "FAIL ") << pad(o.scenario, 7) << o.claim;
        if (!o.passed()) os << " [" << o.detail << "]";
        os << "\n";
    }
    os << r.outcomes.size() - r.failures() << "/" << r.outcomes.size() << " fixtures passed\n";
    return os.str();
}

}  // namespace qil::report
