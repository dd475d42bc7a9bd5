#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tribraid/classify.hpp"
#include "tribraid/conjugacy.hpp"
#include "tribraid/laurent.hpp"
#include "tribraid/serialize.hpp"

namespace tribraid {

/// One knot type with distinct transversal representatives: a negative flype
/// pair of minimal braid crossing number within its pair of conjugacy classes.
struct Table3Row {
  FlypeTriple triple;
  FlypeTriple partner;
  int bennequin = 0;
  int c_b = 0;
  std::pair<XuSymbol, XuSymbol> symbol_pair;  // (class of triple, class of partner)
  LaurentPoly jones;
};

/// Enumerates negative flype braids with |u|+|v|+|w|+1 <= max_cb that are
/// non-degenerate knots of braid index 3 admitting no positive flype, groups
/// them by their unordered pair of class symbols and keeps one minimal-c_b
/// representative per group (lexicographically smallest triple).
/// Rows are sorted by (c_b, bennequin, triple).
std::vector<Table3Row> enumerate_table3(int max_cb);

struct VerificationEntry {
  std::string label;
  std::string word;
  XuSymbol computed;
  std::optional<XuSymbol> reference;
  bool match = false;
  bool computed_conserves = false;
  bool reference_conserves = false;
  /// For mismatches: whether the braid delta^m a1^l1 a2^l2 ... realizing the
  /// reference symbol is conjugate to `word` (a valid but non-canonical name).
  std::optional<bool> reference_conjugate;
  std::string note;
};

struct VerificationReport {
  std::string title;
  std::vector<VerificationEntry> entries;
  std::size_t skipped = 0;

  std::size_t mismatches() const;
  /// Mismatches explained neither by the reference value failing the
  /// conservation law 2m + sum(l) = exponent sum nor by it naming another,
  /// non-canonical element of the same conjugacy class.
  std::size_t unexpected() const;
};

/// Classes of a1^k a2 and a1^k a2^-1 against the reference braid-index<3 table.
VerificationReport verify_table1(int kmin = -8, int kmax = 8);

/// Tabulated flype symbols against the computed invariant for every row and
/// non-degenerate p, q, r <= max_param, plus distinctness of the partner class.
VerificationReport verify_table2(int max_param);

Json to_json(const Table3Row& row);
std::string table3_csv(const std::vector<Table3Row>& rows);
Json table3_json(const std::vector<Table3Row>& rows);
std::string format_report(const VerificationReport& r, bool verbose);

}  // namespace tribraid
