#pragma once

#include <string>
#include <vector>

#include "aqecc/serialize.hpp"

namespace aqecc {

/// Caps that keep every table loop inside the enumeration budget.
struct TableCaps {
  Budget budget{1u << 20, 1};
  std::uint32_t max_m = 3;       // GRM / character variable count
  std::uint32_t max_p = 13;      // QR prime length
  std::size_t max_n = 31;        // BCH length
  std::uint64_t max_q = 9;       // base alphabet q = p^t
  std::uint64_t max_len = 256;   // classical code length
  std::optional<std::uint64_t> only_q;  // restrict to one alphabet
};

struct TableRow {
  std::string family;
  TheoremClaim claim;
  std::optional<AqeccParams> params;
};

const std::vector<std::string>& table_families();
/// Rows for one family (or "all"), in a fixed deterministic order.
std::vector<TableRow> make_table(const std::string& family,
                                 const TableCaps& caps = {});

std::string table_to_csv(const std::vector<TableRow>& rows);
Json table_to_json(const std::vector<TableRow>& rows);

}  // namespace aqecc
