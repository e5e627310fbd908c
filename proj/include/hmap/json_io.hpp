#ifndef HMAP_JSON_IO_HPP
#define HMAP_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "hmap/bohr.hpp"
#include "hmap/bounds.hpp"
#include "hmap/harmonic.hpp"
#include "hmap/numcheck.hpp"
#include "hmap/series.hpp"

namespace hmap {

// Interchange schema shared with the CLI:
//   series  {"order": N, "coeffs": [[re, im], ...]}
//   map     {"h": <series>, "g": <series>, "class": "H0"|"H"|"unconstrained"}

nlohmann::json to_json(const PowerSeries& p);
PowerSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HarmonicMap& f);
HarmonicMap map_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BohrReport& r);
nlohmann::json to_json(const BohrCheck& c);
nlohmann::json to_json(const CoeffBoundReport& r);
nlohmann::json to_json(const GrowthReport& r);
nlohmann::json to_json(const DistortionReport& r);
nlohmann::json to_json(const UnivalenceReport& r);
nlohmann::json to_json(const ConvexityReport& r);

std::string to_string(NormalizationClass cls);
NormalizationClass normalization_from_string(const std::string& s);

}  // namespace hmap

#endif
