#include "tribraid/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "tribraid/jones.hpp"

namespace tribraid {

namespace {

int symbol_weight(const XuSymbol& s) {
  return 2 * s.power + std::accumulate(s.exponents.begin(), s.exponents.end(), 0);
}

XuSymbol make_symbol(int power, std::vector<int> exponents) { return XuSymbol{power, std::move(exponents)}; }

// delta^m a1^l1 a2^l2 a3^l3 a1^l4 ..., a normal form carrying symbol s.
Word realize(const XuSymbol& s) {
  NormalForm nf{s.power, {}};
  int sub = 1;
  for (int l : s.exponents) {
    nf.tail.push_back({sub, l});
    sub = next_subscript(sub);
  }
  return to_word(nf);
}

std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1); }

struct PairKey {
  XuSymbol first;
  XuSymbol second;
};

struct PairKeyLess {
  bool operator()(const PairKey& a, const PairKey& b) const {
    XuSymbolLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

}  // namespace

std::vector<Table3Row> enumerate_table3(int max_cb) {
  if (max_cb < 5) throw PreconditionError("enumerate_table3 requires max_cb >= 5");
  const int budget = max_cb - 1;
  std::map<PairKey, std::vector<FlypeTriple>, PairKeyLess> groups;
  for (int u = -budget; u <= budget; ++u) {
    for (int v = -budget; v <= budget; ++v) {
      for (int w = -budget; w <= budget; ++w) {
        if (u == 0 || v == 0 || w == 0) continue;
        if (std::abs(u) + std::abs(v) + std::abs(w) > budget) continue;
        const FlypeTriple t{u, v, w, -1};
        if (!is_nondegenerate(t) || admits_positive_variant(t)) continue;
        const Word word = flype_word(t);
        if (component_count(word) != 1) continue;
        if (braid_index(word).index != 3) continue;
        XuSymbol a = xu_invariant(word);
        XuSymbol b = xu_invariant(flype_word(flype_partner(t)));
        if (XuSymbolLess{}(b, a)) std::swap(a, b);
        groups[PairKey{std::move(a), std::move(b)}].push_back(t);
      }
    }
  }

  std::vector<Table3Row> rows;
  for (auto& [key, triples] : groups) {
    const auto by_cb = [](const FlypeTriple& x, const FlypeTriple& y) {
      const int cx = braid_crossing_number(x);
      const int cy = braid_crossing_number(y);
      return cx != cy ? cx < cy : x < y;
    };
    const FlypeTriple rep = *std::min_element(triples.begin(), triples.end(), by_cb);
    Table3Row row;
    row.triple = rep;
    row.partner = flype_partner(rep);
    row.bennequin = bennequin(flype_word(rep));
    row.c_b = braid_crossing_number(rep);
    row.symbol_pair = {xu_invariant(flype_word(rep)), xu_invariant(flype_word(row.partner))};
    if (row.symbol_pair.first == row.symbol_pair.second)
      throw std::logic_error("enumerate_table3: flype pair " + format_triple(rep) + " in a single class");
    row.jones = jones_closure(flype_word(rep));
    if (!(jones_closure(flype_word(row.partner)) == row.jones))
      throw std::logic_error("enumerate_table3: Jones polynomials differ across flype " + format_triple(rep));
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Table3Row& a, const Table3Row& b) {
    if (a.c_b != b.c_b) return a.c_b < b.c_b;
    if (a.bennequin != b.bennequin) return a.bennequin < b.bennequin;
    return a.triple < b.triple;
  });
  return rows;
}

std::size_t VerificationReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.match; }));
}

std::size_t VerificationReport::unexpected() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const VerificationEntry& e) {
    if (!e.computed_conserves) return true;
    return !e.match && e.reference_conserves && !e.reference_conjugate.value_or(false);
  }));
}

namespace {

// Reference braid-index<3 rows for a1^k a2^sign.
std::pair<std::string, XuSymbol> reference_index_table(int k, int sign) {
  if (sign > 0) {
    if (k == 0) return {"a2", make_symbol(0, {1})};
    if (k == -1) return {"a1^-1 a2", make_symbol(-1, {2})};
    if (k == 1 || k == 2) return {"a1^k a2, k = 1, 2", make_symbol(1, k == 1 ? std::vector<int>{} : std::vector<int>{k - 1})};
    if (k >= 3) return {"a1^k a2, k >= 3", make_symbol(-1, {k + 1})};
    auto e = ones(-k - 1);
    e.push_back(2);
    return {"a1^k a2, k <= -2", make_symbol(k, e)};
  }
  if (k == 0) return {"a2^-1", make_symbol(-1, {1})};
  if (k == 1) return {"a1 a2^-1", make_symbol(-1, {2})};
  if (k >= 2) return {"a1^k a2^-1, k >= 2", make_symbol(-1, {1, k})};
  return {"a1^k a2^-1, k <= -1", make_symbol(k, ones(-k - 1))};
}

}  // namespace

VerificationReport verify_table1(int kmin, int kmax) {
  VerificationReport rep;
  rep.title = "braid index < 3 classes";
  for (int sign : {+1, -1}) {
    for (int k = kmin; k <= kmax; ++k) {
      const Word w({{1, k}, {2, sign}});
      const int e = exponent_sum(w);
      auto [label, reference] = reference_index_table(k, sign);
      VerificationEntry entry;
      entry.label = label;
      entry.word = format_word(w);
      entry.computed = xu_invariant(w);
      entry.reference = canonical(reference);
      entry.match = entry.computed == *entry.reference;
      entry.computed_conserves = symbol_weight(entry.computed) == e;
      entry.reference_conserves = symbol_weight(*entry.reference) == e;
      if (!entry.match) {
        std::ostringstream note;
        if (!entry.reference_conserves) {
          note << "inconsistent: reference " << format_symbol(*entry.reference) << " gives 2m+sum(l) = "
               << symbol_weight(*entry.reference) << " but the exponent sum is " << e;
        } else {
          entry.reference_conjugate = are_conjugate(realize(*entry.reference), w);
          if (*entry.reference_conjugate) {
            note << "reference symbol names a conjugate that is not canonical ("
                 << (entry.reference->power < entry.computed.power ? "below summit power" : "more syllables") << ")";
          } else {
            note << "reference symbol belongs to a different conjugacy class";
          }
        }
        entry.note = note.str();
      }
      rep.entries.push_back(std::move(entry));
    }
  }
  return rep;
}

VerificationReport verify_table2(int max_param) {
  if (max_param < 3) throw PreconditionError("verify_table2 requires max_param >= 3");
  VerificationReport rep;
  rep.title = "non-degenerate flype classes";
  for (int row = 0; row < 8; ++row) {
    const int eps = row < 4 ? 1 : -1;
    const int pattern = row % 4;
    for (int p = 1; p <= max_param; ++p) {
      for (int q = 1; q <= max_param; ++q) {
        for (int r = 1; r <= max_param; ++r) {
          const FlypeTriple t{pattern == 1 ? -p : p, pattern == 2 ? -q : q, pattern == 3 ? -r : r, eps};
          if (!is_nondegenerate(t)) {
            ++rep.skipped;
            continue;
          }
          const Word w = flype_word(t);
          VerificationEntry entry;
          entry.label = "row " + std::to_string(row + 1) + " " + format_triple(t);
          entry.word = format_word(w);
          entry.computed = xu_invariant(w);
          entry.reference = table2_symbol(t);
          entry.computed_conserves = symbol_weight(entry.computed) == exponent_sum(w);
          entry.reference_conserves = symbol_weight(*entry.reference) == exponent_sum(w);
          const XuSymbol partner = xu_invariant(flype_word(flype_partner(t)));
          const bool distinct = !(partner == entry.computed);
          entry.match = entry.computed == *entry.reference && distinct;
          if (!distinct) entry.note = "flype partner lies in the same conjugacy class";
          else if (!entry.match) entry.note = "tabulated symbol differs from computed invariant";
          rep.entries.push_back(std::move(entry));
        }
      }
    }
  }
  return rep;
}

Json to_json(const Table3Row& row) {
  return Json{{"c_b", row.c_b},
              {"beta", row.bennequin},
              {"triple", to_json(row.triple)},
              {"partner", to_json(row.partner)},
              {"symbol_pair", Json::array({to_json(row.symbol_pair.first), to_json(row.symbol_pair.second)})},
              {"jones", row.jones.str()},
              {"jones_terms", polynomial_to_json(row.jones)}};
}

Json table3_json(const std::vector<Table3Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

std::string table3_csv(const std::vector<Table3Row>& rows) {
  std::ostringstream os;
  os << "cb,beta,u,v,w,u2,v2,w2,symbol1,symbol2,jones\n";
  for (const auto& r : rows) {
    os << r.c_b << ',' << r.bennequin << ',' << r.triple.u << ',' << r.triple.v << ',' << r.triple.w << ','
       << r.partner.u << ',' << r.partner.v << ',' << r.partner.w << ',' << csv_field(format_symbol(r.symbol_pair.first))
       << ',' << csv_field(format_symbol(r.symbol_pair.second)) << ',' << csv_field(r.jones.str()) << '\n';
  }
  return os.str();
}

std::string format_report(const VerificationReport& r, bool verbose) {
  std::ostringstream os;
  os << r.title << ": " << r.entries.size() << " checked, " << r.mismatches() << " mismatched, " << r.unexpected()
     << " unexpected";
  if (r.skipped) os << ", " << r.skipped << " degenerate skipped";
  os << '\n';
  for (const auto& e : r.entries) {
    if (!verbose && e.match) continue;
    os << (e.match ? "  ok       " : "  MISMATCH ") << e.label << "  [" << e.word << "]  computed "
       << format_symbol(e.computed);
    if (e.reference) os << "  reference " << format_symbol(*e.reference);
    if (!e.note.empty()) os << "  -- " << e.note;
    os << '\n';
  }
  return os.str();
}

}  // namespace tribraid
