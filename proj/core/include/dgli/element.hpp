#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgli/alphabet.hpp"
#include "dgli/rational.hpp"

namespace dgli {

// Sparse tensor-algebra element: finitely many words with nonzero rational
// coefficients, truncated to a fixed maximal word length. Products silently
// drop words beyond the truncation, which realizes the completed algebra up
// to that length; all consumers must agree on the truncation, and mixing
// truncations or alphabets throws.
class Element {
 public:
  Element(const GradedAlphabet& alphabet, int truncation);

  static Element generator(const GradedAlphabet& alphabet, std::size_t index,
                           int truncation);
  static Element from_word(const GradedAlphabet& alphabet, Word word,
                           Rational coefficient, int truncation);

  const GradedAlphabet& alphabet() const { return *alphabet_; }
  int truncation() const { return truncation_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Rational>& terms() const { return terms_; }
  Rational coeff(const Word& word) const;

  // Degree shared by every stored word; nullopt when mixed or zero.
  std::optional<int> homogeneous_degree() const;
  // Zero is homogeneous of every degree.
  bool is_homogeneous_of(int degree) const;

  void add_term(Word word, const Rational& coefficient);

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& scalar);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& scalar, Element e) {
    return e *= scalar;
  }

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }

  Element component_of_length(std::size_t length) const;
  std::string str() const;

 private:
  const GradedAlphabet* alphabet_;
  int truncation_;
  std::map<Word, Rational> terms_;
};

// a*u + b*v.
Element elem_combine(const Rational& a, const Element& u, const Rational& b,
                     const Element& v);

Element tensor_product(const Element& u, const Element& v);

// Graded commutator [u, v] = uv - (-1)^{|u||v|} vu, expanded per homogeneous
// word pair.
Element bracket(const Element& u, const Element& v);

// ad_g^k(v) for a single generator g.
Element ad_pow(std::size_t generator_index, unsigned k, const Element& v);

// Alphabet morphism: rewrites each letter by its image, which must be
// homogeneous of the letter's degree (or zero) so that signs are preserved.
Element substitute(const Element& e, const GradedAlphabet& target,
                   int truncation, const std::vector<Element>& images);

// JSON array of {"word", "coeff"} objects, words in lexicographic order.
std::string element_json(const Element& e);

}  // namespace dgli
