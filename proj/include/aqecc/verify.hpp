#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aqecc/css.hpp"
#include "aqecc/lincode.hpp"

namespace aqecc {

struct VerifyOptions {
  std::uint64_t seed = 18781729;
  Budget budget{};
  std::uint64_t max_q = 64;  // field-axioms exhaustive cap
};

struct VerifyResult {
  std::string suite;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // one per failure
  std::vector<std::string> warnings;  // advisory flags, not failures

  bool ok() const { return failures == 0; }
  void check(bool pass, const std::string& what);
};

const std::vector<std::string>& verify_suite_names();
VerifyResult run_verify_suite(const std::string& name,
                              const VerifyOptions& options = {});
/// name may be a suite name or "all".
std::vector<VerifyResult> run_verify(const std::string& name,
                                     const VerifyOptions& options = {});

// randomized generators shared by suites and tests
LinearCode random_code(std::mt19937_64& rng, const FieldPtr& field,
                       std::size_t n, std::size_t max_k);
CssPair random_css_pair(std::mt19937_64& rng, const FieldPtr& field,
                        std::size_t n, std::size_t max_k1);
FieldBasis random_basis(std::mt19937_64& rng, const TowerPtr& tower);

}  // namespace aqecc
