#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aqecc/galois.hpp"
#include "aqecc/linalg.hpp"

namespace aqecc {

/// Knobs shared by every exhaustive oracle.
struct Budget {
  std::uint64_t max_codewords = 1ull << 26;
  unsigned threads = 1;
};

enum class WeightKind { absolute, relative, even_like, odd_like, dual_code };
enum class OracleStatus { exact, budget_exceeded, undefined_zero_code };
enum class OracleMethod { exhaustive, coset_exhaustive };

std::string to_string(WeightKind k);
std::string to_string(OracleStatus s);
std::string to_string(OracleMethod m);

/// Outcome of a weight oracle. `value` is meaningful only when status ==
/// exact; budget overruns and zero codes are explicit outcomes, never bounds.
struct WeightReport {
  WeightKind kind = WeightKind::absolute;
  OracleStatus status = OracleStatus::exact;
  std::uint32_t value = 0;
  OracleMethod method = OracleMethod::exhaustive;
  std::uint64_t enumerated = 0;
  // identifiers of the code(s) the report refers to
  std::uint64_t q = 0;
  std::size_t n = 0, k = 0, k2 = 0;

  bool exact() const { return status == OracleStatus::exact; }
};

/// Linear code over GF(q), held by its canonical reduced-row-echelon
/// generator matrix (pivot columns leftmost, zero rows dropped), so two codes
/// with the same codeword set compare equal as matrices.
class LinearCode {
 public:
  LinearCode(FieldPtr field, std::size_t n,
             const std::vector<std::vector<GfElem>>& rows);
  static LinearCode zero(FieldPtr field, std::size_t n);
  static LinearCode full(FieldPtr field, std::size_t n);
  static LinearCode from_matrix(GfMat rows);

  const FieldPtr& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return gen_.rows; }
  const GfMat& generator() const { return gen_; }
  std::span<const GfElem> row(std::size_t i) const { return gen_.row(i); }

  bool contains(std::span<const GfElem> word) const;
  /// Codeword for a message vector of length k.
  std::vector<GfElem> encode(std::span<const GfElem> message) const;

  bool operator==(const LinearCode& o) const {
    return field_->same_field(*o.field_) && n_ == o.n_ && gen_ == o.gen_;
  }

  /// Cached exact minimum distance, if some oracle already computed it.
  std::optional<std::uint32_t> cached_distance() const;

 private:
  friend WeightReport min_distance(const LinearCode&, const Budget&);
  FieldPtr field_;
  std::size_t n_;
  GfMat gen_;
  struct Cache {
    std::mutex mu;
    std::optional<std::uint32_t> distance;
  };
  std::shared_ptr<Cache> cache_;
};

LinearCode dual(const LinearCode& c);

/// Exact minimum Hamming weight over all q^k - 1 nonzero codewords.
WeightReport min_distance(const LinearCode& c, const Budget& budget = {});

/// Minimum weight over c1 \ c2; requires c2 nested in c1.
WeightReport relative_min_weight(const LinearCode& c1, const LinearCode& c2,
                                 const Budget& budget = {});

/// Minimum weights split by coordinate sum: even-like (sum 0) vs odd-like.
struct EvenOddWeights {
  OracleStatus status = OracleStatus::exact;
  std::optional<std::uint32_t> even, odd;
  std::uint64_t enumerated = 0;
};
EvenOddWeights even_odd_weights(const LinearCode& c, const Budget& budget = {});

/// q-ary expansion of a code over GF(q^m) with respect to a basis of
/// GF(q^m)/GF(q): [n, k, d] -> [mn, mk, >= d].
LinearCode expand(const LinearCode& c, const FieldBasis& basis);
/// Expansion of a single vector; building block of expand().
std::vector<GfElem> expand_vector(const FieldBasis& basis,
                                  std::span<const GfElem> v);

bool is_subcode(const LinearCode& c2, const LinearCode& c1);

/// Does some minimum-weight codeword have a nonzero i-th coordinate?
/// nullopt when the enumeration exceeds the budget.
std::optional<bool> has_min_weight_word_at(const LinearCode& c, std::size_t i,
                                           const Budget& budget = {});
/// Is there a nonzero codeword whose i-th coordinate is zero? (exact, by rank)
bool has_zero_coordinate_word(const LinearCode& c, std::size_t i);

/// Every codeword, message order; guarded by the budget. Test/verify helper.
std::vector<std::vector<GfElem>> all_codewords(const LinearCode& c,
                                               const Budget& budget = {});

/// q^k with overflow saturation to UINT64_MAX.
std::uint64_t pow_sat(std::uint64_t q, std::size_t k);

}  // namespace aqecc
