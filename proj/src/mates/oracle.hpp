#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spectral/spectral.hpp"

namespace skewspec::mates {

inline constexpr std::size_t kMaxOracleVertices = 5;

using SpectrumKey = std::pair<spectral::CharPoly, spectral::CharPoly>;  // S, J - I - S

struct OracleClasses {
  std::size_t n = 0;
  std::size_t graph_count = 0;
  // canonical forms of the isomorphism classes sharing each key
  std::map<SpectrumKey, std::set<std::string>> classes;
  std::map<std::string, SpectrumKey> key_of;  // canonical form -> key
};

/// Every oriented graph on n vertices, grouped by generalized skew-spectrum
/// and split into isomorphism classes. Throws Capability for n > 5 and
/// Argument for n < 2.
OracleClasses brute_force_oracle(std::size_t n);

/// Mate classes of the class `canonical` according to the oracle.
std::set<std::string> oracle_mates(const OracleClasses& oracle, const std::string& canonical);

struct OracleMismatch {
  std::string code;
  std::set<std::string> expected;  // oracle
  std::set<std::string> found;     // enumerate_mates
  std::string error;               // set when enumeration threw
};

struct OracleComparison {
  std::size_t n = 0;
  std::size_t graph_count = 0;
  std::size_t family_members = 0;
  std::size_t family_classes = 0;
  std::size_t key_count = 0;
  std::size_t class_count = 0;
  std::map<std::string, std::size_t> verdict_counts;  // over family members
  std::vector<OracleMismatch> mismatches;
};

/// Runs enumerate_mates on every family member on n vertices and compares
/// its mate classes with the oracle. `threads` = 0 picks a default.
OracleComparison compare_with_oracle(std::size_t n, unsigned threads = 0);

}  // namespace skewspec::mates
