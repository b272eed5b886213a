#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "prohecke/json_io.hpp"

namespace prohecke {

struct VerifyOptions {
  int max_len = 3;
  /// 0 runs a suite exhaustively; otherwise the number of random cases.
  int samples = 0;
  std::uint64_t seed = 20240601;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  long long cases = 0;
  long long failure_count = 0;
  std::vector<std::string> failures;  // first few messages only
  nlohmann::json details = nlohmann::json::object();

  bool ok() const { return failure_count == 0; }
  void check(bool condition, const std::string& message);
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws PreconditionError when the suite does not
/// apply to the configured group or field.
SuiteReport run_suite(const Context& ctx, const std::string& suite, const VerifyOptions& options);

nlohmann::json report_json(const SuiteReport& report);

/// Every (t, w) with l(w) <= max_len; the Omega window has radius 1 when Omega is infinite.
std::vector<ProPElt> basis_elements(const Context& ctx, int max_len);

/// Generators of H as an algebra: tau_t, tau_{n~_s}, and tau of the Omega generators and their inverses.
std::vector<ProPElt> algebra_generators(const Context& ctx);

/// Count of positive affine roots (alpha, h) sent to negative ones, by
/// scanning h directly.
int brute_force_length(const AffineWeylGroup& W, const ExtAffWeylElt& w);

}  // namespace prohecke
