#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "monogamy/measures.hpp"
#include "monogamy/search.hpp"
#include "monogamy/types.hpp"

namespace monogamy {

/// x rounded to the given number of significant decimal digits.
double round_to_significant(double x, int digits);

nlohmann::json state_to_json(const PureState<double>& psi);
PureState<double> pure_state_from_json(const nlohmann::json& j);

nlohmann::json density_to_json(const DensityMatrix<double>& rho);
DensityMatrix<double> density_matrix_from_json(const nlohmann::json& j);

using StateVariant = std::variant<PureState<double>, DensityMatrix<double>>;

/// Reads either state schema, keyed on "amplitudes" vs "rows".
StateVariant state_variant_from_json(const nlohmann::json& j);

/// Fixed-key report serialization, values at 12 significant digits.
nlohmann::json report_to_json(const MeasureReport<double>& report);

nlohmann::json search_result_to_json(const SearchResult& result);

/// CSV histogram of sampled values with fixed bin width 1e-3; lines are
/// "value,count" with value the lower bin edge. `header` is emitted first as
/// a comment line (seed echo).
void write_histogram_csv(std::ostream& os, const std::vector<double>& values,
                         const std::string& header);

}  // namespace monogamy
