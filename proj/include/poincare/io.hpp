#ifndef POINCARE_IO_HPP
#define POINCARE_IO_HPP

// Artifact serialization.  Every file carries a meta block (k, m, alpha,
// precision_bits, tool version); reals are decimal strings at full working
// precision so cross-language consumers parse losslessly.  CSV flavor:
// header row, decimal-string reals, '.' radix, '\n' line endings.

#include "poincare/predict.hpp"
#include "poincare/zeros.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace poincare {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct Meta {
    int k = 0;
    int m = 0;
    Real alpha;
    unsigned precision_bits = 106;
};

struct TableRow {
    Real re, im;
    Real deviation;
    Real log10_deviation;  // log10 |deviation|
    bool precision_limited = false;
};

Json meta_json(const Meta& meta);

Json records_json(const Meta& meta, const std::vector<ZeroRecord>& records);
std::string records_csv(const Meta& meta, const std::vector<ZeroRecord>& records);

Json catalog_json(const Meta& meta, const Catalog& catalog);

Json prediction_json(const Meta& meta, const PredictionReport& report);
std::string prediction_csv(const Meta& meta, const PredictionReport& report);

Json count_json(const Meta& meta, const RectSpec& rect, int count);
std::string count_csv(const Meta& meta, const RectSpec& rect, int count);

Json dominance_json(const Meta& meta, const std::vector<DominanceCell>& cells);
std::string dominance_csv(const Meta& meta, const std::vector<DominanceCell>& cells);

Json table_json(const Meta& meta, const std::vector<TableRow>& rows);
std::string table_csv(const Meta& meta, const std::vector<TableRow>& rows);

// Canonical rendering used for every JSON artifact (2-space indent, trailing
// newline); re-rendering a parsed artifact reproduces it byte for byte.
std::string render_json(const Json& j);

}  // namespace poincare

#endif
