#include "aqecc/tables.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace aqecc {
namespace {

struct PrimePower {
  std::uint32_t p, t;
  std::uint64_t q;
};

std::vector<PrimePower> prime_powers_up_to(std::uint64_t max_q) {
  std::vector<PrimePower> out;
  for (std::uint64_t q = 2; q <= max_q; ++q) {
    std::uint64_t v = q;
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= v; ++d)
      if (v % d == 0) {
        p = d;
        break;
      }
    std::uint32_t t = 0;
    while (v % p == 0) {
      v /= p;
      ++t;
    }
    if (v == 1) out.push_back({p, t, q});
  }
  return out;
}

bool wanted(const PrimePower& pp, bool expanded, const TableCaps& caps) {
  if (caps.only_q && pp.q != *caps.only_q) return false;
  return expanded ? pp.t >= 2 : pp.t == 1;
}

void add_row(std::vector<TableRow>& rows, const std::string& family,
             AqeccDerivation d) {
  rows.push_back(TableRow{family, std::move(d.claim), std::move(d.params)});
}

void grm_rows(std::vector<TableRow>& rows, const std::string& family,
              bool expanded, const TableCaps& caps) {
  for (const auto& pp : prime_powers_up_to(caps.max_q)) {
    if (!wanted(pp, expanded, caps)) continue;
    for (std::uint32_t m = 1; m <= caps.max_m; ++m) {
      if (pow_sat(pp.q, m) > caps.max_len) continue;
      std::uint32_t top = static_cast<std::uint32_t>(m * (pp.q - 1));
      for (std::uint32_t a1 = 0; a1 < top; ++a1)
        for (std::uint32_t a2 = a1 + 1; a2 < top; ++a2)
          add_row(rows, family,
                  grm_aqecc(pp.p, pp.t, m, a1, a2, std::nullopt, caps.budget));
    }
  }
}

void character_rows(std::vector<TableRow>& rows, const std::string& family,
                    bool expanded, const TableCaps& caps) {
  for (const auto& pp : prime_powers_up_to(caps.max_q)) {
    if (pp.p == 2 || !wanted(pp, expanded, caps)) continue;
    for (std::uint32_t m = 1; m <= caps.max_m; ++m) {
      if ((std::uint64_t{1} << m) > caps.max_len) continue;
      for (std::uint32_t r1 = 0; r1 < m; ++r1)
        for (std::uint32_t r2 = r1 + 1; r2 <= m; ++r2)
          add_row(rows, family,
                  character_aqecc(pp.p, pp.t, m, r1, r2, std::nullopt,
                                  caps.budget));
    }
  }
}

void bch_nested_rows(std::vector<TableRow>& rows, const std::string& family,
                    bool expanded, const TableCaps& caps) {
  for (const auto& pp : prime_powers_up_to(caps.max_q)) {
    if (!wanted(pp, expanded, caps)) continue;
    for (std::size_t n = 3; n <= caps.max_n; ++n) {
      if (std::gcd(pp.q, static_cast<std::uint64_t>(n)) != 1) continue;
      std::uint32_t mm = multiplicative_order(pp.q, n);
      if (pow_sat(pp.p, pp.t * mm) > caps.max_len) continue;
      if (!(pow_sat(pp.q, mm / 2) < n && n <= pow_sat(pp.q, mm) - 1)) continue;
      std::uint64_t delta_max = std::min<std::uint64_t>(
          n * pow_sat(pp.q, (mm + 1) / 2) / (pow_sat(pp.q, mm) - 1), n);
      for (std::uint32_t d1 = 2; d1 <= delta_max; ++d1)
        for (std::uint32_t d2 = 2; d2 <= delta_max; ++d2)
          add_row(rows, family,
                  bch_nested_aqecc(pp.p, pp.t, n, d1, d2, std::nullopt,
                                  caps.budget));
    }
  }
}

void bch_abch1_rows(std::vector<TableRow>& rows, const std::string& family,
                    bool expanded, const TableCaps& caps) {
  for (const auto& pp : prime_powers_up_to(caps.max_q)) {
    if (pp.p == 2 || !wanted(pp, expanded, caps)) continue;
    const std::uint32_t m_lo = (pp.q == 3) ? 4 : 3;
    for (std::uint32_t m = m_lo; m <= m_lo; ++m) {
      const std::uint32_t q32 = static_cast<std::uint32_t>(pp.q);
      auto emit = [&](std::uint32_t bullet, std::uint32_t c, std::uint32_t l) {
        add_row(rows, family,
                bch_abch1_aqecc(pp.p, pp.t, m, bullet, c, l, std::nullopt,
                                caps.budget));
      };
      emit(1, 0, 0);
      for (std::uint32_t c = 0; c + 2 <= q32; ++c) emit(2, c, 0);
      for (std::uint32_t c = 2; c <= q32; ++c)
        for (std::uint32_t l = 0; l + 2 <= c; ++l) emit(3, c, l);
      for (std::uint32_t c = q32 + 3; c <= 2 * q32; ++c)
        for (std::uint32_t l = 0; l + q32 + 3 <= c; ++l) emit(4, c, l);
      for (std::uint32_t l = 0; l + 2 <= q32; ++l) emit(5, 0, l);
    }
  }
}

void qr_rows(std::vector<TableRow>& rows, const std::string& family,
             bool expanded, const TableCaps& caps) {
  for (std::uint32_t p_len = 3; p_len <= caps.max_p; p_len += 2) {
    bool prime = p_len > 2;
    for (std::uint32_t d = 2; d * d <= p_len; ++d)
      if (p_len % d == 0) prime = false;
    if (!prime) continue;
    for (const auto& pp : prime_powers_up_to(caps.max_q)) {
      if (!wanted(pp, expanded, caps)) continue;
      if (pp.q % p_len == 0) continue;
      if (!is_quadratic_residue(pp.q, p_len)) continue;
      add_row(rows, family,
              qr_aqecc(p_len, pp.p, pp.t, std::nullopt, caps.budget));
    }
  }
}

}  // namespace

const std::vector<std::string>& table_families() {
  static const std::vector<std::string> names{
      "grm",       "expanded-grm",       "character", "expanded-character",
      "bch-nested", "expanded-bch-nested", "bch-abch1", "expanded-bch-abch1",
      "qr",        "expanded-qr"};
  return names;
}

std::vector<TableRow> make_table(const std::string& family,
                                 const TableCaps& caps) {
  std::vector<TableRow> rows;
  auto dispatch = [&](const std::string& f) {
    bool expanded = f.rfind("expanded-", 0) == 0;
    std::string base = expanded ? f.substr(9) : f;
    if (base == "grm")
      grm_rows(rows, f, expanded, caps);
    else if (base == "character")
      character_rows(rows, f, expanded, caps);
    else if (base == "bch-nested")
      bch_nested_rows(rows, f, expanded, caps);
    else if (base == "bch-abch1")
      bch_abch1_rows(rows, f, expanded, caps);
    else if (base == "qr")
      qr_rows(rows, f, expanded, caps);
    else
      throw std::invalid_argument("unknown table family: " + f);
  };
  if (family == "all")
    for (const auto& f : table_families()) dispatch(f);
  else
    dispatch(family);
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "family,theorem,inputs,n,k,dz_bound,dx_bound,dz_oracle,dx_oracle,"
         "status,note\n";
  auto opt = [](const auto& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const auto& r : rows) {
    std::string inputs;
    for (const auto& [k, v] : r.claim.inputs) {
      if (!inputs.empty()) inputs += ';';
      inputs += k + "=" + v;
    }
    out << r.family << ',' << r.claim.theorem << ',' << inputs << ','
        << opt(r.claim.claimed_n) << ',' << opt(r.claim.claimed_k) << ','
        << opt(r.claim.claimed_dz) << ',' << opt(r.claim.claimed_dx) << ','
        << opt(r.claim.oracle_dz) << ',' << opt(r.claim.oracle_dx) << ','
        << to_string(r.claim.status) << ',' << r.claim.note << '\n';
  }
  return out.str();
}

Json table_to_json(const std::vector<TableRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j{{"family", r.family}, {"claim", claim_to_json(r.claim)}};
    j["params"] = r.params ? params_to_json(*r.params) : Json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace aqecc
