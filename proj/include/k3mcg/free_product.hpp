#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3mcg/numeric.hpp"

namespace k3mcg {

/// Element of C_m * C_p in alternating normal form, with generators t (first
/// factor, order m; m == 0 means infinite cyclic) and s (second factor, order p).
///
/// Z * Z/p is (m, p) = (0, p); the Z/2 * Z/p quotient is (2, p). In the
/// fundamental group of the punctured moduli orbifold, t is the loop around the
/// nodal point and s the loop around the orbifold point.
class FreeProductWord {
 public:
  enum class Tag : std::uint8_t { T, S };
  struct Letter {
    Tag tag;
    std::int64_t exponent;
    friend bool operator==(const Letter&, const Letter&) = default;
  };

  /// The identity of C_m * C_p.
  FreeProductWord(std::int64_t m, std::int64_t p);
  /// Reduces the letters to normal form.
  FreeProductWord(std::int64_t m, std::int64_t p, std::vector<Letter> letters);

  static FreeProductWord t(std::int64_t p, std::int64_t k = 1) { return {0, p, {{Tag::T, k}}}; }
  static FreeProductWord s(std::int64_t p, std::int64_t k = 1) { return {0, p, {{Tag::S, k}}}; }

  std::int64_t first_order() const { return m_; }
  std::int64_t torsion() const { return p_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  FreeProductWord inverse() const;
  /// e.g. "t^2 s^1 t^-1"; "e" for the identity.
  std::string to_string() const;

  friend bool operator==(const FreeProductWord&, const FreeProductWord&) = default;

 private:
  std::int64_t reduce_exponent(Tag tag, std::int64_t e) const;
  void normalize();

  std::int64_t m_;
  std::int64_t p_;
  std::vector<Letter> letters_;
};

/// Parses "t^2 s t^-1 s^3" (whitespace separated, exponent defaults to 1).
FreeProductWord parse_word(std::int64_t m, std::int64_t p, const std::string& text);

FreeProductWord word_multiply(const FreeProductWord& u, const FreeProductWord& v);
FreeProductWord word_power(const FreeProductWord& u, std::int64_t k);

struct Abelianization {
  Integer first;   // reduced mod m when m > 0
  Integer second;  // reduced mod p
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

Abelianization abelianize(const FreeProductWord& u);

/// Z * Z/p -> Z/2 * Z/p, t -> t mod 2.
FreeProductWord project_to_z2_free_product(const FreeProductWord& u);

/// Image of u under the homomorphism t -> image_t, s -> image_s. The caller
/// guarantees image_s^p == e when p is finite (checked).
FreeProductWord substitute(const FreeProductWord& u, const FreeProductWord& image_t, const FreeProductWord& image_s);

struct GenerationVerdict {
  bool can_generate = false;
  std::string stuck_coordinate;  // empty when can_generate
};

/// Can elements abelianizing to (1, 0) generate Z (+) Z/p? Every candidate
/// must abelianize to (1, 0); throws DomainError otherwise.
GenerationVerdict dehn_twist_generation_obstruction(std::int64_t p, const std::vector<FreeProductWord>& candidate_images);

/// True iff (3 m, 3 t mod p) == target for some (m, t).
bool cube_root_obstruction(std::int64_t p, const Abelianization& target);

}  // namespace k3mcg
