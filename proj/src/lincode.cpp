#include "aqecc/lincode.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace aqecc {

std::string to_string(WeightKind k) {
  switch (k) {
    case WeightKind::absolute: return "absolute";
    case WeightKind::relative: return "relative";
    case WeightKind::even_like: return "even-like";
    case WeightKind::odd_like: return "odd-like";
    case WeightKind::dual_code: return "dual";
  }
  return "?";
}

std::string to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::exact: return "exact";
    case OracleStatus::budget_exceeded: return "budget-exceeded";
    case OracleStatus::undefined_zero_code: return "undefined-zero-code";
  }
  return "?";
}

std::string to_string(OracleMethod m) {
  return m == OracleMethod::exhaustive ? "exhaustive" : "coset-exhaustive";
}

std::uint64_t pow_sat(std::uint64_t q, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > UINT64_MAX / q) return UINT64_MAX;
    r *= q;
  }
  return r;
}

LinearCode::LinearCode(FieldPtr field, std::size_t n,
                       const std::vector<std::vector<GfElem>>& rows)
    : field_(std::move(field)), n_(n), cache_(std::make_shared<Cache>()) {
  if (n == 0) throw std::invalid_argument("code length must be >= 1");
  GfMat m(field_, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("ragged generator rows");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= field_->q())
        throw std::invalid_argument("element outside the field");
      m.at(i, j) = rows[i][j];
    }
  }
  gen_ = rref(m);
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) {
  return LinearCode(std::move(field), n, {});
}

LinearCode LinearCode::full(FieldPtr field, std::size_t n) {
  std::vector<std::vector<GfElem>> rows(n, std::vector<GfElem>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return LinearCode(std::move(field), n, rows);
}

LinearCode LinearCode::from_matrix(GfMat rows) {
  LinearCode c(rows.field, rows.cols, {});
  c.gen_ = rref(rows);
  return c;
}

bool LinearCode::contains(std::span<const GfElem> word) const {
  if (word.size() != n_) throw std::invalid_argument("word length mismatch");
  const FiniteField& F = *field_;
  std::vector<GfElem> w(word.begin(), word.end());
  auto pivots = pivot_columns(gen_);
  for (std::size_t j = 0; j < gen_.rows; ++j) {
    GfElem f = w[pivots[j]];
    if (f == 0) continue;
    for (std::size_t c = pivots[j]; c < n_; ++c)
      w[c] = F.sub(w[c], F.mul(f, gen_.at(j, c)));
  }
  return std::all_of(w.begin(), w.end(), [](GfElem v) { return v == 0; });
}

std::vector<GfElem> LinearCode::encode(std::span<const GfElem> message) const {
  if (message.size() != k()) throw std::invalid_argument("message length mismatch");
  const FiniteField& F = *field_;
  std::vector<GfElem> w(n_, 0);
  for (std::size_t j = 0; j < k(); ++j) {
    if (message[j] == 0) continue;
    for (std::size_t c = 0; c < n_; ++c)
      w[c] = F.add(w[c], F.mul(message[j], gen_.at(j, c)));
  }
  return w;
}

std::optional<std::uint32_t> LinearCode::cached_distance() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->distance;
}

LinearCode dual(const LinearCode& c) {
  return LinearCode::from_matrix(right_nullspace(c.generator()));
}

namespace {

struct RowSupport {
  std::vector<std::size_t> pos;
  std::vector<GfElem> val;
};

std::vector<RowSupport> row_supports(const GfMat& gen) {
  std::vector<RowSupport> s(gen.rows);
  for (std::size_t i = 0; i < gen.rows; ++i)
    for (std::size_t j = 0; j < gen.cols; ++j)
      if (gen.at(i, j) != 0) {
        s[i].pos.push_back(j);
        s[i].val.push_back(gen.at(i, j));
      }
  return s;
}

/// Walks message indices [lo, hi) in base-q counter order, maintaining the
/// codeword and its weight incrementally; Extra mirrors the updates for
/// oracle-specific state, Visit inspects each word.
template <typename Extra, typename Visit>
void scan_range(const FiniteField& F, const GfMat& gen,
                const std::vector<RowSupport>& sup, std::uint64_t lo,
                std::uint64_t hi, Extra&& extra, Visit&& visit) {
  const std::uint64_t q = F.q();
  const std::size_t k = gen.rows, n = gen.cols;
  std::vector<GfElem> msg(k, 0);
  {
    std::uint64_t v = lo;
    for (std::size_t j = 0; j < k; ++j) {
      msg[j] = static_cast<GfElem>(v % q);
      v /= q;
    }
  }
  std::vector<GfElem> word(n, 0);
  std::uint32_t weight = 0;
  for (std::size_t j = 0; j < k; ++j)
    if (msg[j] != 0)
      for (std::size_t c = 0; c < n; ++c)
        word[c] = F.add(word[c], F.mul(msg[j], gen.at(j, c)));
  for (auto w : word)
    if (w != 0) ++weight;
  extra.init(msg);

  for (std::uint64_t idx = lo;; ) {
    visit(word, weight, extra);
    if (++idx >= hi) break;
    std::size_t j = 0;
    while (true) {
      GfElem old = msg[j];
      GfElem nu = (old + 1 == q) ? 0 : old + 1;
      msg[j] = nu;
      GfElem delta = F.sub(nu, old);
      const RowSupport& rs = sup[j];
      for (std::size_t t = 0; t < rs.pos.size(); ++t) {
        GfElem& w = word[rs.pos[t]];
        GfElem nw = F.add(w, F.mul(delta, rs.val[t]));
        weight += (nw != 0);
        weight -= (w != 0);
        w = nw;
      }
      extra.step(j, delta);
      if (nu != 0) break;
      ++j;
    }
  }
}

struct NoExtra {
  void init(const std::vector<GfElem>&) {}
  void step(std::size_t, GfElem) {}
};

template <typename R, typename Fn>
std::vector<R> run_chunks(std::uint64_t b, std::uint64_t e, unsigned threads,
                          Fn&& fn) {
  unsigned t_count = std::max(1u, threads);
  if (e <= b) return {};
  std::uint64_t total = e - b;
  if (total < (1ull << 16) || t_count > total) t_count = 1;
  std::vector<R> results(t_count);
  if (t_count == 1) {
    results[0] = fn(b, e);
    return results;
  }
  std::vector<std::thread> pool;
  std::uint64_t chunk = total / t_count;
  for (unsigned t = 0; t < t_count; ++t) {
    std::uint64_t lo = b + chunk * t;
    std::uint64_t hi = (t + 1 == t_count) ? e : lo + chunk;
    pool.emplace_back([&results, t, lo, hi, &fn] { results[t] = fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
  return results;
}

constexpr std::uint32_t kNoWeight = UINT32_MAX;

}  // namespace

WeightReport min_distance(const LinearCode& c, const Budget& budget) {
  WeightReport rep;
  rep.kind = WeightKind::absolute;
  rep.method = OracleMethod::exhaustive;
  rep.q = c.field()->q();
  rep.n = c.n();
  rep.k = c.k();
  if (c.k() == 0) {
    rep.status = OracleStatus::undefined_zero_code;
    return rep;
  }
  std::uint64_t total = pow_sat(rep.q, c.k());
  rep.enumerated = total;
  if (auto cached = c.cached_distance()) {
    rep.value = *cached;
    return rep;
  }
  if (total > budget.max_codewords) {
    rep.status = OracleStatus::budget_exceeded;
    return rep;
  }
  const FiniteField& F = *c.field();
  auto sup = row_supports(c.generator());
  auto chunks = run_chunks<std::uint32_t>(
      1, total, budget.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint32_t best = kNoWeight;
        scan_range(F, c.generator(), sup, lo, hi, NoExtra{},
                   [&](const std::vector<GfElem>&, std::uint32_t w, NoExtra&) {
                     if (w < best) best = w;
                   });
        return best;
      });
  rep.value = *std::min_element(chunks.begin(), chunks.end());
  {
    std::lock_guard<std::mutex> lock(c.cache_->mu);
    c.cache_->distance = rep.value;
  }
  return rep;
}

namespace {

/// Maintains the syndrome of the running codeword against a parity check;
/// zero syndrome <=> membership in the checked code.
struct SyndromeExtra {
  const FiniteField* F = nullptr;
  const std::vector<std::vector<GfElem>>* srows = nullptr;  // per message digit
  std::vector<GfElem> synd;
  std::size_t nonzero = 0;

  void init(const std::vector<GfElem>& msg) {
    std::fill(synd.begin(), synd.end(), 0);
    nonzero = 0;
    for (std::size_t j = 0; j < msg.size(); ++j)
      if (msg[j] != 0) add_multiple(j, msg[j]);
  }
  void step(std::size_t j, GfElem delta) { add_multiple(j, delta); }
  void add_multiple(std::size_t j, GfElem f) {
    const auto& sr = (*srows)[j];
    for (std::size_t i = 0; i < sr.size(); ++i) {
      if (sr[i] == 0) continue;
      GfElem& s = synd[i];
      GfElem ns = F->add(s, F->mul(f, sr[i]));
      nonzero += (ns != 0);
      nonzero -= (s != 0);
      s = ns;
    }
  }
  bool inside() const { return nonzero == 0; }
};

}  // namespace

WeightReport relative_min_weight(const LinearCode& c1, const LinearCode& c2,
                                 const Budget& budget) {
  if (!is_subcode(c2, c1))
    throw std::invalid_argument("relative weight requires nested codes");
  WeightReport rep;
  rep.kind = WeightKind::relative;
  rep.method = OracleMethod::coset_exhaustive;
  rep.q = c1.field()->q();
  rep.n = c1.n();
  rep.k = c1.k();
  rep.k2 = c2.k();
  if (c1.k() == c2.k()) {
    rep.status = OracleStatus::undefined_zero_code;  // empty difference set
    return rep;
  }
  std::uint64_t total = pow_sat(rep.q, c1.k());
  rep.enumerated = total - pow_sat(rep.q, c2.k());
  if (total > budget.max_codewords) {
    rep.status = OracleStatus::budget_exceeded;
    return rep;
  }
  const FiniteField& F = *c1.field();
  LinearCode h2 = dual(c2);
  const GfMat& H = h2.generator();
  std::vector<std::vector<GfElem>> srows(c1.k());
  for (std::size_t j = 0; j < c1.k(); ++j) srows[j] = mat_vec(H, c1.row(j));
  auto sup = row_supports(c1.generator());

  auto chunks = run_chunks<std::uint32_t>(
      1, total, budget.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        SyndromeExtra extra;
        extra.F = &F;
        extra.srows = &srows;
        extra.synd.assign(H.rows, 0);
        std::uint32_t best = kNoWeight;
        scan_range(F, c1.generator(), sup, lo, hi, extra,
                   [&](const std::vector<GfElem>&, std::uint32_t w,
                       SyndromeExtra& ex) {
                     if (w < best && !ex.inside()) best = w;
                   });
        return best;
      });
  rep.value = *std::min_element(chunks.begin(), chunks.end());
  if (rep.value == kNoWeight)
    throw std::logic_error("empty relative difference set despite k1 > k2");
  return rep;
}

namespace {

/// Tracks the coordinate sum of the running codeword.
struct CoordSumExtra {
  const FiniteField* F = nullptr;
  const std::vector<GfElem>* rowsums = nullptr;
  GfElem sum = 0;

  void init(const std::vector<GfElem>& msg) {
    sum = 0;
    for (std::size_t j = 0; j < msg.size(); ++j)
      if (msg[j] != 0) sum = F->add(sum, F->mul(msg[j], (*rowsums)[j]));
  }
  void step(std::size_t j, GfElem delta) {
    sum = F->add(sum, F->mul(delta, (*rowsums)[j]));
  }
};

}  // namespace

EvenOddWeights even_odd_weights(const LinearCode& c, const Budget& budget) {
  EvenOddWeights out;
  if (c.k() == 0) {
    out.status = OracleStatus::undefined_zero_code;
    return out;
  }
  std::uint64_t total = pow_sat(c.field()->q(), c.k());
  out.enumerated = total;
  if (total > budget.max_codewords) {
    out.status = OracleStatus::budget_exceeded;
    return out;
  }
  const FiniteField& F = *c.field();
  std::vector<GfElem> rowsums(c.k(), 0);
  for (std::size_t j = 0; j < c.k(); ++j)
    for (std::size_t col = 0; col < c.n(); ++col)
      rowsums[j] = F.add(rowsums[j], c.generator().at(j, col));
  auto sup = row_supports(c.generator());

  struct MinPair {
    std::uint32_t even = kNoWeight, odd = kNoWeight;
  };
  auto chunks = run_chunks<MinPair>(
      1, total, budget.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        CoordSumExtra extra;
        extra.F = &F;
        extra.rowsums = &rowsums;
        MinPair mp;
        scan_range(F, c.generator(), sup, lo, hi, extra,
                   [&](const std::vector<GfElem>&, std::uint32_t w,
                       CoordSumExtra& ex) {
                     if (ex.sum == 0) {
                       if (w < mp.even) mp.even = w;
                     } else if (w < mp.odd) {
                       mp.odd = w;
                     }
                   });
        return mp;
      });
  std::uint32_t even = kNoWeight, odd = kNoWeight;
  for (const auto& mp : chunks) {
    even = std::min(even, mp.even);
    odd = std::min(odd, mp.odd);
  }
  if (even != kNoWeight) out.even = even;
  if (odd != kNoWeight) out.odd = odd;
  return out;
}

std::vector<GfElem> expand_vector(const FieldBasis& basis,
                                  std::span<const GfElem> v) {
  std::vector<GfElem> out;
  out.reserve(v.size() * basis.size());
  for (GfElem coord : v) {
    auto c = basis.coords(coord);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

LinearCode expand(const LinearCode& c, const FieldBasis& basis) {
  if (!basis.tower()->top()->same_field(*c.field()))
    throw std::invalid_argument("basis tower does not match the code's field");
  const FiniteField& F = *c.field();
  std::vector<std::vector<GfElem>> rows;
  rows.reserve(c.k() * basis.size());
  std::vector<GfElem> scaled(c.n());
  for (std::size_t i = 0; i < c.k(); ++i) {
    for (GfElem b : basis.elements()) {
      for (std::size_t col = 0; col < c.n(); ++col)
        scaled[col] = F.mul(b, c.generator().at(i, col));
      rows.push_back(expand_vector(basis, scaled));
    }
  }
  return LinearCode(basis.tower()->bottom(), c.n() * basis.size(), rows);
}

bool is_subcode(const LinearCode& c2, const LinearCode& c1) {
  if (!c1.field()->same_field(*c2.field()) || c1.n() != c2.n()) return false;
  if (c2.k() > c1.k()) return false;
  return gf_rank(vstack(c1.generator(), c2.generator())) == c1.k();
}

std::optional<bool> has_min_weight_word_at(const LinearCode& c, std::size_t i,
                                           const Budget& budget) {
  if (i >= c.n()) throw std::invalid_argument("coordinate out of range");
  if (c.k() == 0) return false;
  std::uint64_t total = pow_sat(c.field()->q(), c.k());
  if (total > budget.max_codewords) return std::nullopt;
  const FiniteField& F = *c.field();
  auto sup = row_supports(c.generator());
  struct MinAt {
    std::uint32_t best = kNoWeight;
    bool at_i = false;
  };
  auto chunks = run_chunks<MinAt>(
      1, total, budget.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        MinAt r;
        scan_range(F, c.generator(), sup, lo, hi, NoExtra{},
                   [&](const std::vector<GfElem>& word, std::uint32_t w,
                       NoExtra&) {
                     if (w < r.best) {
                       r.best = w;
                       r.at_i = word[i] != 0;
                     } else if (w == r.best && !r.at_i) {
                       r.at_i = word[i] != 0;
                     }
                   });
        return r;
      });
  std::uint32_t best = kNoWeight;
  for (const auto& r : chunks) best = std::min(best, r.best);
  bool at_i = false;
  for (const auto& r : chunks)
    if (r.best == best && r.at_i) at_i = true;
  return at_i;
}

bool has_zero_coordinate_word(const LinearCode& c, std::size_t i) {
  if (i >= c.n()) throw std::invalid_argument("coordinate out of range");
  if (c.k() == 0) return false;
  bool column_zero = true;
  for (std::size_t r = 0; r < c.k(); ++r)
    if (c.generator().at(r, i) != 0) column_zero = false;
  if (column_zero) return true;  // the whole code avoids i
  return c.k() >= 2;             // the i-th-coordinate-zero subcode has dim k-1
}

std::vector<std::vector<GfElem>> all_codewords(const LinearCode& c,
                                               const Budget& budget) {
  std::uint64_t total = pow_sat(c.field()->q(), c.k());
  if (total > budget.max_codewords)
    throw std::invalid_argument("codeword enumeration exceeds budget");
  std::vector<std::vector<GfElem>> out;
  out.reserve(total);
  out.emplace_back(c.n(), 0);
  if (c.k() == 0) return out;
  const FiniteField& F = *c.field();
  auto sup = row_supports(c.generator());
  scan_range(F, c.generator(), sup, 1, total, NoExtra{},
             [&](const std::vector<GfElem>& word, std::uint32_t, NoExtra&) {
               out.push_back(word);
             });
  return out;
}

}  // namespace aqecc
