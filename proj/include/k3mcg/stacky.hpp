#pragma once

#include <functional>

#include "k3mcg/free_product.hpp"
#include "k3mcg/fricke.hpp"

namespace k3mcg {

/// Right action of the covering group on path classes: act(g, y) is g . y.
/// Must satisfy act(h, act(g, y)) == act(g h, y) and act(e, y) == y.
using WordAction = std::function<FreeProductWord(const FrickeElement&, const FreeProductWord&)>;

/// The action through the Fricke flag: flagged elements apply the involutive
/// automorphism t -> t^-1, s -> s^-1; unflagged elements act trivially.
FreeProductWord flag_inversion_action(const FrickeElement& g, const FreeProductWord& y);

/// Pair (gamma, y) of the stacky fundamental group.
struct StackyElement {
  FrickeElement gamma;
  FreeProductWord word;
  friend bool operator==(const StackyElement&, const StackyElement&) = default;
};

/// Group law (g1, y1)(g2, y2) = (g1 g2, (g2 . y1) # y2) for a fixed action.
class StackyGroup {
 public:
  StackyGroup(long n, std::int64_t p, WordAction action = flag_inversion_action);

  long level() const { return n_; }
  std::int64_t torsion() const { return p_; }

  StackyElement make(const FrickeElement& gamma, const FreeProductWord& word) const;
  StackyElement identity() const;
  StackyElement compose(const StackyElement& x, const StackyElement& y) const;
  StackyElement inverse(const StackyElement& x) const;

 private:
  void check(const StackyElement& x) const;

  long n_;
  std::int64_t p_;
  WordAction action_;
};

}  // namespace k3mcg
