#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tribraid/errors.hpp"
#include "tribraid/normal_form.hpp"
#include "tribraid/word.hpp"

namespace tribraid {

/// (power; exponents) of a summit element. Canonical symbols carry the
/// minimal rotation of the exponent sequence.
struct XuSymbol {
  int power = 0;
  std::vector<int> exponents;

  friend bool operator==(const XuSymbol&, const XuSymbol&) = default;
};

/// Shorter exponent sequences first, then lexicographic. Only defined for
/// symbols with the same power; throws std::domain_error otherwise.
std::strong_ordering symbol_compare(const XuSymbol& x, const XuSymbol& y);

/// Total order used for containers: power first, then symbol_compare.
struct XuSymbolLess {
  bool operator()(const XuSymbol& x, const XuSymbol& y) const;
};

/// Index of the lexicographically least rotation (Booth).
std::size_t least_rotation(std::span<const int> seq);
std::vector<int> minimal_rotation(std::span<const int> seq);

XuSymbol symbol_of(const NormalForm& nf);
XuSymbol canonical(XuSymbol s);

/// Conjugate by delta^q a^s delta^-q: cycle the first tail syllable to the
/// end (subscript shifted by -q) and renormalize.
NormalForm tail_move(const NormalForm& nf);

/// Single-letter cycling: moves the first tail letter past delta^q to the end.
/// Unlike tail_move it can split a syllable, which is what lets a^-1 b^-1
/// style braids (delta^-2 a2^2) reach their summit power delta^-1.
NormalForm cycle_letter(const NormalForm& nf);

/// Normal forms visited by repeated letter cycling from normalize(w),
/// restricted to the maximal power reached. Contains every tail-move image
/// of its elements.
std::set<NormalForm> summit_orbit(const Word& w);

XuSymbol xu_invariant(const Word& w);

bool are_conjugate(const Word& u, const Word& v);

class BoundExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct SummitSearchLimits {
  std::size_t max_letters = 14;
  std::size_t max_elements = 200000;
};

/// Exhaustive summit set by breadth-first conjugation with a1, a2, a3 and
/// delta (both directions). Verification oracle only.
std::set<NormalForm> summit_set_full(const Word& w, SummitSearchLimits limits = {});

std::string format_symbol(const XuSymbol& s);

}  // namespace tribraid
