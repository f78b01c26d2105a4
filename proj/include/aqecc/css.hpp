#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aqecc/combinators.hpp"
#include "aqecc/lincode.hpp"

namespace aqecc {

/// Validated nested pair c2 strictly inside c1 (so k1 > k2).
class CssPair {
 public:
  CssPair(LinearCode c1, LinearCode c2);
  const LinearCode& c1() const { return c1_; }
  const LinearCode& c2() const { return c2_; }
  std::size_t n() const { return c1_.n(); }
  std::size_t k() const { return c1_.k() - c2_.k(); }

  bool operator==(const CssPair& o) const { return c1_ == o.c1_ && c2_ == o.c2_; }

 private:
  LinearCode c1_, c2_;
};

/// A distance value; when !exact it is a lower bound taken from the theorem
/// statement or from available oracle data.
struct DistanceValue {
  std::uint32_t value = 0;
  bool exact = false;
};

struct AqeccParams {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;       // logical dimension, log_q K
  std::uint64_t K = 0;     // code space dimension q^k
  DistanceValue dz, dx;
  std::optional<bool> pure;

  /// Advisory quantum Singleton sanity: k <= n - dx - dz + 2 (pure codes).
  bool singleton_ok() const {
    if (!dz.exact || !dx.exact) return true;
    return k + dx.value + dz.value <= n + 2;
  }
};

enum class ClaimStatus {
  verified_exact,    // all claims checked against exact oracle values
  verified_bound,    // structural claims exact, some distances oracle-checked
  budget_exceeded,   // claims emitted, no distance oracle completed
  hypothesis_failed, // a theorem hypothesis does not hold for the input
  violated           // an oracle value contradicts a claimed bound
};
std::string to_string(ClaimStatus s);

/// Verification ledger entry for a theorem application.
struct TheoremClaim {
  std::string theorem;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<std::size_t> claimed_n, claimed_k;
  std::optional<std::uint32_t> claimed_dz, claimed_dx;
  std::optional<std::uint32_t> oracle_dz, oracle_dx;
  ClaimStatus status = ClaimStatus::budget_exceeded;
  std::string note;

  bool bounds_hold() const {
    if (claimed_dz && oracle_dz && *oracle_dz < *claimed_dz) return false;
    if (claimed_dx && oracle_dx && *oracle_dx < *claimed_dx) return false;
    return true;
  }
};

/// A theorem application: the constructed pair and its parameters are absent
/// when the hypotheses fail.
struct AqeccDerivation {
  TheoremClaim claim;
  std::optional<CssPair> pair;
  std::optional<AqeccParams> params;
};

/// CSS construction: dz = wt(C1\C2), dx = wt(C2^perp \ C1^perp); pure iff
/// those equal d(C1) and d(C2^perp).
AqeccParams derive(const CssPair& pair, const Budget& budget = {});

/// Expansion of a CSS pair by a basis of GF(q^m)/GF(q):
/// [[n,k]]_{q^m} -> [[mn, mk]]_q with dz* >= d(C1), dx* >= d(C2^perp).
AqeccDerivation expand_aqecc(const CssPair& pair, const FieldBasis& basis,
                             const Budget& budget = {});

/// Direct sum of two pairs over the same field.
AqeccDerivation direct_sum_aqecc(const CssPair& a, const CssPair& b,
                                 const Budget& budget = {});

/// Puncture both codes at coordinate i; case split on whether C1 has a
/// minimum-weight word with nonzero i-th coordinate.
AqeccDerivation puncture_aqecc(const CssPair& pair, std::size_t i,
                               const Budget& budget = {});

/// Extend both codes by a parity coordinate; case split on the even/odd-like
/// minimum weights of C1.
AqeccDerivation extend_aqecc(const CssPair& pair, const Budget& budget = {});

/// (u|u+v) on two same-length pairs:
/// dz >= min{2 d1, d3}, dx >= min{2 d(C4^perp), d(C2^perp)}.
AqeccDerivation uuv_aqecc(const CssPair& a, const CssPair& b,
                          const Budget& budget = {});

/// Shared tail of every theorem checker: run the oracles on the derived pair,
/// compare with the claimed bounds and fill in status/params.
void finish_claim(AqeccDerivation& d, const Budget& budget);

}  // namespace aqecc
