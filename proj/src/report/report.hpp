#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mates/mates.hpp"
#include "mates/oracle.hpp"

namespace skewspec::report {

inline constexpr const char* kSchema = "skewspec/1";

nlohmann::json to_json(const exact::IntMatrix& m);
nlohmann::json to_json(const ortho::RegularRationalOrthogonal& q);
nlohmann::json to_json(const exact::PrimeFactorization& f);

/// Analysis document. `full` adds the mate list, verdict, relationship
/// edges and factorability; `seconds` adds a timing block.
nlohmann::json analysis_document(const mates::MateReport& r, bool full,
                                 std::optional<double> seconds = std::nullopt);

/// Relationship diagram: one node per graph (subject, converse, mates), one
/// edge per relationship labelled with the level of its Q.
std::string relationship_dot(const mates::MateReport& r);

struct VerifyOutcome {
  std::string text;
  bool passed = true;
};

/// Structural checks on any graph plus the mate audit on family members.
VerifyOutcome verify(const graphs::OrientedGraph& g);

inline constexpr std::size_t kSurveyMinOrder = 2;
inline constexpr std::size_t kSurveyMaxOrder = 10;

/// Survey sample codes: one std::mt19937_64 seeded with `seed`, samples in
/// order, each vertex pair in code order taking '0', '+' or '-' for the
/// digit 0, 1, 2 of an unbiased base-3 draw (outputs at or above the largest
/// multiple of 3 below 2^64 are redrawn).
std::vector<std::string> survey_samples(std::size_t n, std::size_t count, std::uint64_t seed);

/// CSV with header code,in_family,ell0,t,mate_count,verdict. Rows follow
/// sample order whatever the thread count.
std::string survey_csv(std::size_t n, std::size_t count, std::uint64_t seed, unsigned threads = 0);

nlohmann::json oracle_document(const mates::OracleComparison& cmp);

/// Two-space indented dump with a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace skewspec::report
