#include "tribraid/conjugacy.hpp"

#include <algorithm>
#include <optional>
#include <deque>
#include <sstream>

namespace tribraid {

std::strong_ordering symbol_compare(const XuSymbol& x, const XuSymbol& y) {
  if (x.power != y.power) throw std::domain_error("symbol_compare: symbols have different powers");
  if (auto c = x.exponents.size() <=> y.exponents.size(); c != 0) return c;
  return x.exponents <=> y.exponents;
}

bool XuSymbolLess::operator()(const XuSymbol& x, const XuSymbol& y) const {
  if (x.power != y.power) return x.power < y.power;
  return symbol_compare(x, y) < 0;
}

std::size_t least_rotation(std::span<const int> seq) {
  const std::size_t n = seq.size();
  if (n == 0) return 0;
  std::vector<int> s(seq.begin(), seq.end());
  s.insert(s.end(), seq.begin(), seq.end());
  std::vector<long> f(s.size(), -1);
  long k = 0;
  for (long j = 1; j < static_cast<long>(s.size()); ++j) {
    const int sj = s[j];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[k + i + 1]) {
      if (sj < s[k + i + 1]) k = j - i - 1;
      i = f[i];
    }
    if (sj != s[k + i + 1]) {
      if (sj < s[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return static_cast<std::size_t>(k) % n;
}

std::vector<int> minimal_rotation(std::span<const int> seq) {
  std::vector<int> out(seq.begin(), seq.end());
  std::rotate(out.begin(), out.begin() + static_cast<long>(least_rotation(seq)), out.end());
  return out;
}

XuSymbol symbol_of(const NormalForm& nf) {
  XuSymbol s;
  s.power = nf.power;
  s.exponents.reserve(nf.tail.size());
  for (const auto& syl : nf.tail) s.exponents.push_back(syl.exponent);
  return s;
}

XuSymbol canonical(XuSymbol s) {
  s.exponents = minimal_rotation(s.exponents);
  return s;
}

NormalForm tail_move(const NormalForm& nf) {
  if (nf.tail.empty()) return nf;
  const Syllable head = nf.tail.front();
  NormalForm rest{nf.power, std::vector<Syllable>(nf.tail.begin() + 1, nf.tail.end())};
  NormalFormBuilder b(rest);
  // delta^q a_k delta^-q = a_{k-q}
  b.append(wrap_subscript(head.subscript - nf.power), head.exponent);
  return b.result();
}

NormalForm cycle_letter(const NormalForm& nf) {
  if (nf.tail.empty()) return nf;
  NormalForm rest = nf;
  const int head = rest.tail.front().subscript;
  if (--rest.tail.front().exponent == 0) rest.tail.erase(rest.tail.begin());
  NormalFormBuilder b(rest);
  b.append(wrap_subscript(head - nf.power), 1);
  return b.result();
}

std::set<NormalForm> summit_orbit(const Word& w) {
  std::set<NormalForm> seen;
  NormalForm cur = normalize(w);
  int top = cur.power;
  while (seen.insert(cur).second) {
    if (cur.power > top) {
      top = cur.power;
      std::erase_if(seen, [top](const NormalForm& nf) { return nf.power < top; });
    }
    cur = cycle_letter(cur);
  }
  std::erase_if(seen, [top](const NormalForm& nf) { return nf.power != top; });
  return seen;
}

XuSymbol xu_invariant(const Word& w) {
  const auto orbit = summit_orbit(w);
  std::optional<XuSymbol> best;
  for (const auto& nf : orbit) {
    XuSymbol s = canonical(symbol_of(nf));
    if (!best || symbol_compare(s, *best) < 0) best = std::move(s);
  }
  return *best;
}

bool are_conjugate(const Word& u, const Word& v) {
  if (exponent_sum(u) != exponent_sum(v)) return false;
  return xu_invariant(u) == xu_invariant(v);
}

std::set<NormalForm> summit_set_full(const Word& w, SummitSearchLimits limits) {
  if (w.letter_count() > limits.max_letters)
    throw BoundExceeded("summit_set_full: word has more than " + std::to_string(limits.max_letters) + " letters");

  static const std::vector<Word> conjugators = {
      Word::generator(1), Word::generator(2), Word::generator(3), Word({{2, 1}, {1, 1}})};

  NormalForm start = normalize(w);
  int top = start.power;
  std::set<NormalForm> level{start};
  std::deque<NormalForm> queue{start};
  while (!queue.empty()) {
    const NormalForm x = queue.front();
    queue.pop_front();
    const Word xw = to_word(x);
    for (const auto& c : conjugators) {
      const Word ci = invert(c);
      for (const Word& y : {ci * xw * c, c * xw * ci}) {
        NormalForm ny = normalize(y);
        if (ny.power > top) {
          top = ny.power;
          level.clear();
          queue.clear();
        }
        if (ny.power == top && level.insert(ny).second) {
          if (level.size() > limits.max_elements) throw BoundExceeded("summit_set_full: element limit reached");
          queue.push_back(std::move(ny));
        }
      }
    }
  }
  return level;
}

std::string format_symbol(const XuSymbol& s) {
  std::ostringstream os;
  os << '(' << s.power << "; (";
  for (std::size_t i = 0; i < s.exponents.size(); ++i) {
    if (i) os << ',';
    os << s.exponents[i];
  }
  os << "))";
  return os.str();
}

}  // namespace tribraid
