#include "dgli/element.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace dgli {
namespace {

bool odd(int degree) { return (degree & 1) != 0; }

void check_compatible(const Element& a, const Element& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw std::invalid_argument("elements over different alphabets");
  }
  if (a.truncation() != b.truncation()) {
    throw std::invalid_argument("elements with different truncations");
  }
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

Element::Element(const GradedAlphabet& alphabet, int truncation)
    : alphabet_(&alphabet), truncation_(truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
}

Element Element::generator(const GradedAlphabet& alphabet, std::size_t index,
                           int truncation) {
  if (index >= alphabet.size()) {
    throw std::invalid_argument("generator index out of range");
  }
  return from_word(alphabet, Word{static_cast<std::uint8_t>(index)},
                   Rational(1), truncation);
}

Element Element::from_word(const GradedAlphabet& alphabet, Word word,
                           Rational coefficient, int truncation) {
  Element e(alphabet, truncation);
  e.add_term(std::move(word), coefficient);
  return e;
}

Rational Element::coeff(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Rational() : it->second;
}

std::optional<int> Element::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& [word, c] : terms_) {
    int d = word_degree(*alphabet_, word);
    if (!degree) {
      degree = d;
    } else if (*degree != d) {
      return std::nullopt;
    }
  }
  return degree;
}

bool Element::is_homogeneous_of(int degree) const {
  for (const auto& [word, c] : terms_) {
    if (word_degree(*alphabet_, word) != degree) return false;
  }
  return true;
}

void Element::add_term(Word word, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  if (word.size() > static_cast<std::size_t>(truncation_)) return;
  auto [it, inserted] = terms_.emplace(std::move(word), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r(*alphabet_, truncation_);
  for (const auto& [word, c] : terms_) r.terms_.emplace(word, -c);
  return r;
}

Element& Element::operator+=(const Element& other) {
  check_compatible(*this, other);
  for (const auto& [word, c] : other.terms_) add_term(word, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_compatible(*this, other);
  for (const auto& [word, c] : other.terms_) add_term(word, -c);
  return *this;
}

Element& Element::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [word, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  check_compatible(a, b);
  return a.terms_ == b.terms_;
}

Element Element::component_of_length(std::size_t length) const {
  Element r(*alphabet_, truncation_);
  for (const auto& [word, c] : terms_) {
    if (word.size() == length) r.terms_.emplace(word, c);
  }
  return r;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [word, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.display() << "·" << word_label(*alphabet_, word);
  }
  return out.str();
}

Element elem_combine(const Rational& a, const Element& u, const Rational& b,
                     const Element& v) {
  check_compatible(u, v);
  Element r(u.alphabet(), u.truncation());
  for (const auto& [word, c] : u.terms()) r.add_term(word, a * c);
  for (const auto& [word, c] : v.terms()) r.add_term(word, b * c);
  return r;
}

Element tensor_product(const Element& u, const Element& v) {
  check_compatible(u, v);
  Element r(u.alphabet(), u.truncation());
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      if (wu.size() + wv.size() > static_cast<std::size_t>(u.truncation()))
        continue;
      r.add_term(concat(wu, wv), cu * cv);
    }
  }
  return r;
}

Element bracket(const Element& u, const Element& v) {
  check_compatible(u, v);
  Element r(u.alphabet(), u.truncation());
  for (const auto& [wu, cu] : u.terms()) {
    const int du = word_degree(u.alphabet(), wu);
    for (const auto& [wv, cv] : v.terms()) {
      if (wu.size() + wv.size() > static_cast<std::size_t>(u.truncation()))
        continue;
      const int dv = word_degree(v.alphabet(), wv);
      const Rational c = cu * cv;
      r.add_term(concat(wu, wv), c);
      r.add_term(concat(wv, wu), odd(du) && odd(dv) ? c : -c);
    }
  }
  return r;
}

Element ad_pow(std::size_t generator_index, unsigned k, const Element& v) {
  Element g =
      Element::generator(v.alphabet(), generator_index, v.truncation());
  Element r = v;
  for (unsigned i = 0; i < k; ++i) r = bracket(g, r);
  return r;
}

Element substitute(const Element& e, const GradedAlphabet& target,
                   int truncation, const std::vector<Element>& images) {
  if (images.size() != e.alphabet().size()) {
    throw std::invalid_argument("one image per source generator required");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!(images[i].alphabet() == target) ||
        images[i].truncation() != truncation) {
      throw std::invalid_argument("image in wrong algebra");
    }
    if (!images[i].is_homogeneous_of(e.alphabet().gen(i).degree)) {
      throw std::invalid_argument("image must preserve generator degree");
    }
  }
  Element out(target, truncation);
  for (const auto& [word, c] : e.terms()) {
    std::map<Word, Rational> partial{{Word{}, c}};
    for (auto letter : word) {
      std::map<Word, Rational> next;
      for (const auto& [pw, pc] : partial) {
        for (const auto& [iw, ic] : images[letter].terms()) {
          if (pw.size() + iw.size() > static_cast<std::size_t>(truncation))
            continue;
          Rational nc = pc * ic;
          auto [it, inserted] = next.emplace(concat(pw, iw), nc);
          if (!inserted) it->second += nc;
        }
      }
      partial = std::move(next);
    }
    for (auto& [pw, pc] : partial) out.add_term(pw, pc);
  }
  return out;
}

std::string element_json(const Element& e) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [word, c] : e.terms()) {
    arr.push_back({{"word", word_label(e.alphabet(), word)}, {"coeff", c.str()}});
  }
  return arr.dump();
}

}  // namespace dgli
