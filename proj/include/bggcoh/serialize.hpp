#pragma once

#include <string>

#include <json.hpp>

#include "bggcoh/bwb.hpp"
#include "bggcoh/cech.hpp"
#include "bggcoh/pipeline.hpp"
#include "bggcoh/steinberg.hpp"

namespace bggcoh::serialize {

inline constexpr const char* kSchema = "bggcoh/1";
inline constexpr const char* kEngineVersion = "bggcoh 1.0.0";

nlohmann::json mpz_to_json(const mpz_class& v);

nlohmann::json to_json(const weights::Weight& w);
nlohmann::json to_json(const steinberg::QPolynomial& p);
nlohmann::json to_json(const bwb::CohomologyProfile& profile);
nlohmann::json to_json(const bwb::BggComplexData& data);
nlohmann::json to_json(const cech::GradedDimensionTable& table);
nlohmann::json to_json(const steinberg::SteinbergTable& table);
nlohmann::json to_json(const homology::SpectralPage& page);
nlohmann::json to_json(const homology::DeRhamReport& report);
nlohmann::json to_json(const homology::AcyclicityReport& report);

std::string to_csv(const bwb::CohomologyProfile& profile);
std::string to_csv(const bwb::BggComplexData& data);
std::string to_csv(const cech::GradedDimensionTable& table);
std::string to_csv(const steinberg::SteinbergTable& table);
std::string to_csv(const homology::DeRhamReport& report);
std::string to_csv(const homology::AcyclicityReport& report);

std::string to_text(const bwb::CohomologyProfile& profile);
std::string to_text(const bwb::BggComplexData& data);
std::string to_text(const cech::GradedDimensionTable& table);
std::string to_text(const steinberg::SteinbergTable& table);
std::string to_text(const homology::DeRhamReport& report);
std::string to_text(const homology::AcyclicityReport& report);

/// Aligned (p,q) grid of page dimensions, q rows top-down.
std::string render_page_text(const homology::SpectralPage& page);

}  // namespace bggcoh::serialize
