#include "k3mcg/free_product.hpp"

#include <sstream>

namespace k3mcg {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FreeProductWord::FreeProductWord(std::int64_t m, std::int64_t p) : m_(m), p_(p) {
  if (m_ < 0 || m_ == 1) throw DomainError("first factor order must be 0 (infinite) or >= 2");
  if (p_ < 1) throw DomainError("torsion order must be positive");
}

FreeProductWord::FreeProductWord(std::int64_t m, std::int64_t p, std::vector<Letter> letters) : FreeProductWord(m, p) {
  letters_ = std::move(letters);
  normalize();
}

std::int64_t FreeProductWord::reduce_exponent(Tag tag, std::int64_t e) const {
  if (tag == Tag::S) return floor_mod(e, p_);
  return m_ == 0 ? e : floor_mod(e, m_);
}

void FreeProductWord::normalize() {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) {
    const std::int64_t e = reduce_exponent(l.tag, l.exponent);
    if (e == 0) continue;
    if (!out.empty() && out.back().tag == l.tag) {
      out.back().exponent = reduce_exponent(l.tag, out.back().exponent + e);
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back({l.tag, e});
    }
  }
  letters_ = std::move(out);
}

FreeProductWord FreeProductWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return {m_, p_, std::move(out)};
}

std::string FreeProductWord::to_string() const {
  if (letters_.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << (letters_[i].tag == Tag::T ? 't' : 's') << '^' << letters_[i].exponent;
  }
  return os.str();
}

FreeProductWord parse_word(std::int64_t m, std::int64_t p, const std::string& text) {
  std::istringstream is(text);
  std::vector<FreeProductWord::Letter> letters;
  std::string token;
  while (is >> token) {
    if (token == "e") continue;
    if (token[0] != 't' && token[0] != 's') throw DomainError("unknown generator in word token '" + token + "'");
    const auto tag = token[0] == 't' ? FreeProductWord::Tag::T : FreeProductWord::Tag::S;
    std::int64_t e = 1;
    if (token.size() > 1) {
      if (token[1] != '^' || token.size() == 2) throw DomainError("malformed word token '" + token + "'");
      try {
        std::size_t used = 0;
        e = std::stoll(token.substr(2), &used);
        if (used != token.size() - 2) throw DomainError("malformed exponent in '" + token + "'");
      } catch (const std::logic_error&) {
        throw DomainError("malformed exponent in '" + token + "'");
      }
    }
    letters.push_back({tag, e});
  }
  return {m, p, std::move(letters)};
}

FreeProductWord word_multiply(const FreeProductWord& u, const FreeProductWord& v) {
  if (u.first_order() != v.first_order() || u.torsion() != v.torsion())
    throw DomainError("words live in different free products");
  std::vector<FreeProductWord::Letter> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return {u.first_order(), u.torsion(), std::move(letters)};
}

FreeProductWord word_power(const FreeProductWord& u, std::int64_t k) {
  const FreeProductWord base = k < 0 ? u.inverse() : u;
  FreeProductWord out(u.first_order(), u.torsion());
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = word_multiply(out, base);
  return out;
}

Abelianization abelianize(const FreeProductWord& u) {
  Abelianization out{0, 0};
  for (const auto& l : u.letters()) (l.tag == FreeProductWord::Tag::T ? out.first : out.second) += l.exponent;
  if (u.first_order() > 0) out.first = mod_nonneg(out.first, Integer(u.first_order()));
  out.second = mod_nonneg(out.second, Integer(u.torsion()));
  return out;
}

FreeProductWord project_to_z2_free_product(const FreeProductWord& u) {
  if (u.first_order() != 0) throw DomainError("projection expects a word in Z * Z/p");
  return {2, u.torsion(), u.letters()};
}

FreeProductWord substitute(const FreeProductWord& u, const FreeProductWord& image_t, const FreeProductWord& image_s) {
  if (image_t.first_order() != image_s.first_order() || image_t.torsion() != image_s.torsion())
    throw DomainError("images live in different free products");
  if (!word_power(image_s, u.torsion()).is_identity())
    throw DomainError("image of s does not have order dividing p");
  if (u.first_order() > 0 && !word_power(image_t, u.first_order()).is_identity())
    throw DomainError("image of t does not have order dividing m");
  FreeProductWord out(image_t.first_order(), image_t.torsion());
  for (const auto& l : u.letters())
    out = word_multiply(out, word_power(l.tag == FreeProductWord::Tag::T ? image_t : image_s, l.exponent));
  return out;
}

GenerationVerdict dehn_twist_generation_obstruction(std::int64_t p, const std::vector<FreeProductWord>& candidate_images) {
  if (p < 1) throw DomainError("torsion order must be positive");
  for (const FreeProductWord& w : candidate_images) {
    if (w.torsion() != p || w.first_order() != 0) throw DomainError("candidate does not live in Z * Z/p");
    const Abelianization ab = abelianize(w);
    if (!(ab == Abelianization{1, 0}))
      throw DomainError("candidate " + w.to_string() + " abelianizes to (" + ab.first.get_str() + ", " +
                        ab.second.get_str() + "), not (1, 0)");
  }
  // The subgroup generated by (1, 0) is Z (+) 0; it is everything iff Z/p is trivial.
  if (p == 1) return {true, ""};
  return {false, "torsion coordinate Z/" + std::to_string(p) + " is never reached"};
}

bool cube_root_obstruction(std::int64_t p, const Abelianization& target) {
  if (p < 1) throw DomainError("torsion order must be positive");
  if (target.first % 3 != 0) return false;
  const Integer residue = mod_nonneg(target.second, Integer(p));
  for (std::int64_t t = 0; t < p; ++t)
    if (mod_nonneg(Integer(3 * t), Integer(p)) == residue) return true;
  return false;
}

}  // namespace k3mcg
