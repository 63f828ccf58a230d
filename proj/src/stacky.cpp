#include "k3mcg/stacky.hpp"

namespace k3mcg {

FreeProductWord flag_inversion_action(const FrickeElement& g, const FreeProductWord& y) {
  if (!g.fricke()) return y;
  std::vector<FreeProductWord::Letter> letters = y.letters();
  for (auto& l : letters) l.exponent = -l.exponent;
  return {y.first_order(), y.torsion(), std::move(letters)};
}

StackyGroup::StackyGroup(long n, std::int64_t p, WordAction action) : n_(n), p_(p), action_(std::move(action)) {
  if (n_ < 1 || p_ < 1) throw DomainError("stacky group needs positive level and torsion");
  if (!action_) throw DomainError("missing word action");
}

void StackyGroup::check(const StackyElement& x) const {
  if (x.gamma.level() != n_) throw DomainError("element level does not match the stacky group");
  if (x.word.first_order() != 0 || x.word.torsion() != p_)
    throw DomainError("word does not live in Z * Z/" + std::to_string(p_));
}

StackyElement StackyGroup::make(const FrickeElement& gamma, const FreeProductWord& word) const {
  StackyElement x{gamma, word};
  check(x);
  return x;
}

StackyElement StackyGroup::identity() const { return {FrickeElement::identity(n_), FreeProductWord(0, p_)}; }

StackyElement StackyGroup::compose(const StackyElement& x, const StackyElement& y) const {
  check(x);
  check(y);
  return {fricke_compose(x.gamma, y.gamma), word_multiply(action_(y.gamma, x.word), y.word)};
}

StackyElement StackyGroup::inverse(const StackyElement& x) const {
  check(x);
  const FrickeElement g = x.gamma.inverse();
  return {g, action_(g, x.word.inverse())};
}

}  // namespace k3mcg
