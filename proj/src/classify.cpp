#include "tribraid/classify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace tribraid {

FlypeTriple::FlypeTriple(int u_, int v_, int w_, int eps) : u(u_), v(v_), w(w_), epsilon(eps) {
  if (u == 0 || v == 0 || w == 0) throw std::invalid_argument("flype exponents must be nonzero");
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("flype epsilon must be +1 or -1");
}

Word flype_word(const FlypeTriple& t) { return Word({{1, t.u}, {2, t.v}, {1, t.w}, {2, t.epsilon}}); }

FlypeTriple flype_partner(const FlypeTriple& t) { return {t.w, t.v, t.u, t.epsilon}; }

FlypeTriple inverse_triple(const FlypeTriple& t) { return {-t.w, -t.v, -t.u, -t.epsilon}; }

bool is_nondegenerate(const FlypeTriple& t) {
  const int e = t.epsilon;
  if (std::abs(t.v) < 2) return false;
  const int mid = t.v + e;
  if (t.u == mid || t.u == t.w || mid == t.w) return false;
  auto forbidden = [e](int x) { return x == 0 || x == e || x == 2 * e; };
  return !forbidden(t.u) && !forbidden(t.w);
}

bool admits_positive_variant(const FlypeTriple& t) {
  if (t.epsilon != -1) throw PreconditionError("admits_positive_variant requires a negative flype (epsilon = -1)");
  return t.u == 1 || t.w == 1 || t.v == 2;
}

namespace {

struct RowSigns {
  int epsilon;
  int su, sv, sw;
};

constexpr std::array<RowSigns, 8> kRows{{
    {+1, +1, +1, +1},
    {+1, -1, +1, +1},
    {+1, +1, -1, +1},
    {+1, +1, +1, -1},
    {-1, +1, +1, +1},
    {-1, -1, +1, +1},
    {-1, +1, -1, +1},
    {-1, +1, +1, -1},
}};

int sign(int x) { return x < 0 ? -1 : 1; }

void append_ones(std::vector<int>& v, int n) { v.insert(v.end(), static_cast<std::size_t>(std::max(n, 0)), 1); }

}  // namespace

std::optional<int> table2_row(const FlypeTriple& t) {
  for (int i = 0; i < static_cast<int>(kRows.size()); ++i) {
    const auto& r = kRows[static_cast<std::size_t>(i)];
    if (r.epsilon == t.epsilon && r.su == sign(t.u) && r.sv == sign(t.v) && r.sw == sign(t.w)) return i;
  }
  return std::nullopt;
}

XuSymbol table2_row_symbol(int row, int p, int q, int r) {
  XuSymbol s;
  auto& e = s.exponents;
  switch (row) {
    case 0: s.power = 3; e = {p - 2, q - 1, r - 2}; break;
    case 1: s.power = 1 - p; e = {q, r - 1}; append_ones(e, p); break;
    case 2: s.power = 2 - q; e = {p - 1}; append_ones(e, q - 1); e.push_back(r - 1); break;
    case 3: s.power = 1 - r; e = {p - 1, q}; append_ones(e, r); break;
    case 4: s.power = 0; e = {p, q - 1, r}; break;
    case 5: s.power = -p; e = {q, r + 1}; append_ones(e, p - 2); break;
    case 6: s.power = -q - 1; e = {r + 1, p + 1}; append_ones(e, q - 1); break;
    case 7: s.power = -r; e = {p + 1, q}; append_ones(e, r - 2); break;
    default: throw std::out_of_range("table row index");
  }
  return s;
}

namespace {

bool entries_positive(const XuSymbol& s) {
  return std::all_of(s.exponents.begin(), s.exponents.end(), [](int x) { return x >= 1; });
}

}  // namespace

XuSymbol table2_symbol(const FlypeTriple& t) {
  if (!is_nondegenerate(t)) throw PreconditionError("table2_symbol: degenerate flype " + format_triple(t));
  const auto row = table2_row(t);
  if (!row) throw PreconditionError("table2_symbol: sign pattern of " + format_triple(t) + " is not tabulated");
  XuSymbol s = table2_row_symbol(*row, std::abs(t.u), std::abs(t.v), std::abs(t.w));
  if (!entries_positive(s)) throw std::logic_error("table2_symbol: non-positive tail entry for " + format_triple(t));
  return canonical(std::move(s));
}

namespace {

// Forward generation over each row: p, q range freely, r is pinned by the
// exponent sum u + v + w + eps of the class.
void match_rows(const XuSymbol& target, int exp_sum, bool via_inverse, std::vector<FlypeMatch>& out) {
  const int total = std::accumulate(target.exponents.begin(), target.exponents.end(), 0);
  const int bound = total + static_cast<int>(target.exponents.size()) + 3;
  for (int row = 0; row < static_cast<int>(kRows.size()); ++row) {
    const auto& rs = kRows[static_cast<std::size_t>(row)];
    for (int p = 1; p <= bound; ++p) {
      for (int q = 1; q <= bound; ++q) {
        const int rem = exp_sum - rs.epsilon - rs.su * p - rs.sv * q;
        const int r = rem * rs.sw;
        if (r < 1) continue;
        XuSymbol s = table2_row_symbol(row, p, q, r);
        if (s.power != target.power || s.exponents.size() != target.exponents.size()) continue;
        if (!entries_positive(s)) continue;
        if (canonical(std::move(s)) != target) continue;
        FlypeTriple t{rs.su * p, rs.sv * q, rs.sw * r, rs.epsilon};
        if (via_inverse) t = inverse_triple(t);
        out.push_back({t, is_nondegenerate(t), via_inverse});
      }
    }
  }
}

}  // namespace

std::vector<FlypeMatch> flype_matches(const Word& w) {
  std::vector<FlypeMatch> out;
  const int e = exponent_sum(w);
  match_rows(xu_invariant(w), e, false, out);
  match_rows(xu_invariant(invert(w)), -e, true, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FlypeTriple> detect_flype(const Word& w) {
  std::vector<FlypeTriple> out;
  for (const auto& m : flype_matches(w))
    if (m.nondegenerate) out.push_back(m.triple);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BraidIndex braid_index(const Word& w) {
  const int s = exponent_sum(w);
  const XuSymbol sym = xu_invariant(w);
  BraidIndex bi;
  // Only s1^k s2^{+-1} with matching exponent sum can be conjugate to w.
  for (int sgn : {+1, -1}) {
    const int k = s - sgn;
    if (xu_invariant(Word({{1, k}, {2, sgn}})) == sym) {
      bi.index = std::abs(k) == 1 ? 1 : 2;
      bi.reduced_k = k;
      bi.reduced_sign = sgn;
      return bi;
    }
  }
  return bi;
}

LinkClassification classify(const Word& w) {
  const BraidIndex bi = braid_index(w);
  if (bi.index < 3) return BraidIndexLow{bi.index, *bi.reduced_k, *bi.reduced_sign};
  const auto flypes = detect_flype(w);
  if (flypes.empty()) return UniqueClass{xu_invariant(w)};
  FlypePair fp;
  fp.triple = *std::min_element(flypes.begin(), flypes.end(), [](const FlypeTriple& a, const FlypeTriple& b) {
    const int ca = braid_crossing_number(a);
    const int cb = braid_crossing_number(b);
    return ca != cb ? ca < cb : a < b;
  });
  fp.own_symbol = xu_invariant(w);
  fp.partner_symbol = xu_invariant(flype_word(flype_partner(fp.triple)));
  if (fp.own_symbol == fp.partner_symbol)
    throw std::logic_error("classify: non-degenerate flype " + format_triple(fp.triple) + " has equal classes");
  return fp;
}

Invertibility is_invertible(const Word& w) {
  Invertibility r;
  if (braid_index(w).index < 3) return r;
  r.applicable = true;
  if (are_conjugate(w, reverse(w))) {
    r.invertible = true;
    r.reason = InvertibilityReason::SymbolsEqual;
  } else if (!detect_flype(w).empty()) {
    r.invertible = true;
    r.reason = InvertibilityReason::FlypeAdmissible;
  } else {
    r.invertible = false;
  }
  return r;
}

int braid_crossing_number(const FlypeTriple& t) { return std::abs(t.u) + std::abs(t.v) + std::abs(t.w) + 1; }

std::optional<TransversalPair> transversal_pair(const FlypeTriple& t) {
  if (t.epsilon != -1) throw PreconditionError("transversal_pair requires epsilon = -1");
  if (!is_nondegenerate(t) || admits_positive_variant(t)) return std::nullopt;
  if (component_count(flype_word(t)) != 1) return std::nullopt;
  return TransversalPair{t, flype_partner(t), t.u + t.v + t.w - 4, braid_crossing_number(t)};
}

int bennequin(const Word& w) { return exponent_sum(w) - 3; }

std::string to_string(InvertibilityReason r) {
  switch (r) {
    case InvertibilityReason::SymbolsEqual: return "SymbolsEqual";
    case InvertibilityReason::FlypeAdmissible: return "FlypeAdmissible";
    case InvertibilityReason::Neither: return "Neither";
  }
  return "Neither";
}

std::string format_triple(const FlypeTriple& t) {
  std::ostringstream os;
  os << '(' << t.u << ',' << t.v << ',' << t.w << ',' << (t.epsilon > 0 ? "+1" : "-1") << ')';
  return os.str();
}

}  // namespace tribraid
