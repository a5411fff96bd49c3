#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "qil/analysis.hpp"
#include "qil/corpus.hpp"

namespace qil::report {

inline constexpr int kSchemaVersion = 1;

/// {"pair": [i, j], "basis": "c", "kind": ..., "conditioning": [...], "rhs": 0|1|null}, 1-based.
nlohmann::json to_json(const CorrelationVerdict& v);
nlohmann::json to_json(const PairReport& p);

nlohmann::json to_json(const AnalyzeReport& r);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const DualityReport& r);
nlohmann::json to_json(const corpus::CorpusReport& r);

std::string to_text(const AnalyzeReport& r);
std::string to_text(const VerifyReport& r);
std::string to_text(const DualityReport& r);
std::string to_text(const corpus::CorpusReport& r);

}  // namespace qil::report
