#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitweyl/inner_product.hpp"

namespace orbitweyl {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr const char* kReportSchema = "orbit-weyl/1";

struct SuiteConfig {
  Family family = Family::sl;
  int N = 3;
  std::vector<std::string> suites;  // empty means all, in dependency order
  int k_max = 8;
  int gram_degree_max = 2;
  std::uint64_t seed = 0xC0FFEE;
  std::optional<int> pair_count;  // commutator pairs sampled; nullopt = all
};

// Suite names in dependency order.
const std::vector<std::string>& all_suites();
// Throws std::invalid_argument for an unknown name.
std::vector<std::string> parse_suites(const std::string& comma_list);

enum class Status { pass, fail, skipped };
std::string status_name(Status s);

struct Check {
  std::string id;
  std::string description;
  Status status = Status::pass;
  std::string witness;  // serialized counterexample on failure
};

struct SuiteReport {
  std::string name;
  Status status = Status::pass;
  std::vector<Check> checks;
  double wall_ms = 0;
};

struct VerificationReport {
  Family family = Family::sl;
  int N = 0;
  int m = 0;
  int dim_g = 0;
  int dim_orbit = 0;
  SuiteConfig config;
  std::vector<SuiteReport> suites;
  std::vector<GramResult> grams;
  Status overall = Status::pass;

  // Timings are left out unless requested so equal configs give equal bytes.
  std::string to_json(bool include_timings = false) const;
  std::string to_text(bool include_timings = false) const;
};

// Throws UnsupportedAlgebra for an invalid family or rank.
VerificationReport run(const SuiteConfig& config);

// Objects: D0, A, B, C, S, f_psi, gram:p. Throws std::invalid_argument for an
// unknown or unavailable object.
std::string dump(const SuiteConfig& config, const std::string& object);

}  // namespace orbitweyl
