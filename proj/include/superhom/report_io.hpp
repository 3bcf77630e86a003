#pragma once

#include <string>

#include "json.hpp"
#include "superhom/complex.hpp"

namespace superhom {

nlohmann::ordered_json to_json(const RankMode& mode);
nlohmann::ordered_json to_json(const BettiReport& report);
// Header "m,dim,ker,betti", one row per m.
std::string to_csv(const BettiReport& report);
// Rows m / SpaD / KerD / Bett. With abs_weight the header shows |weight|.
std::string to_table(const BettiReport& report, bool abs_weight = false);
std::string describe_algebra(const AlgebraOrigin& origin);

}  // namespace superhom
