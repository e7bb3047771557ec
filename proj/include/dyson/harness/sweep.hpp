#ifndef DYSON_HARNESS_SWEEP_HPP
#define DYSON_HARNESS_SWEEP_HPP

// Grid sweeps: every case compares a closed form (or recurrence, or single
// sum) against the expansion oracle, as canonical strings.

#include "dyson/dyson_product.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dyson::harness {

enum class Family { dyson, qdyson, thm1, thm2, thm3, conj1, conj2, conj3, goodrec, qdixon, rothe };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
/// Families run by `verify` when no family is given.
const std::vector<Family>& default_suite();
bool is_q_family(Family f);

struct CaseParams {
  int n = 0;
  std::vector<int> a;
  /// 1-based, as on the command line.
  std::vector<int> indices;
  std::optional<int> alpha, beta;

  friend bool operator==(const CaseParams&, const CaseParams&) = default;
};

struct VerificationCase {
  /// "thm1", "conj2", "qdixon-id7", ...
  std::string family;
  CaseParams params;
  std::string lhs, rhs;
  bool equal = false;
  std::int64_t micros = 0;

  friend bool operator==(const VerificationCase&, const VerificationCase&) = default;
};

struct Counts {
  std::size_t pass = 0, fail = 0;
  friend bool operator==(const Counts&, const Counts&) = default;
};

struct SweepReport {
  std::string version;
  std::string timestamp;
  std::string grid;
  std::vector<VerificationCase> cases;
  Counts counts;
  std::int64_t total_micros = 0;

  bool all_pass() const { return counts.fail == 0; }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

enum class Fault {
  none,
  /// Shift every conj* closed form by one power of q, as if L were off by one.
  l_off_by_one,
};

std::optional<Fault> parse_fault(std::string_view name);

struct SweepOptions {
  std::vector<Family> families;
  int nmax = 4;
  /// Unset: 2 for q families, 3 for classical ones, 4 for qdixon.
  std::optional<int> amax;
  /// Use the q-analogue of dyson/thm* families.
  bool q = false;
  unsigned jobs = 1;
  Fault fault = Fault::none;
  ExpansionLimits limits = ExpansionLimits::from_env();
};

/// Throws std::invalid_argument for options no sweep can honour.
void validate(const SweepOptions& opts);

/// Cases come back in canonical order whatever the job count.
SweepReport run_sweep(const SweepOptions& opts);

std::string describe_grid(const SweepOptions& opts);

} // namespace dyson::harness

#endif
