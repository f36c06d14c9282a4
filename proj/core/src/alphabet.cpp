#include "dgli/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgli {

GradedAlphabet::GradedAlphabet(std::vector<Generator> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty() || generators_.size() > 255) {
    throw std::invalid_argument("alphabet needs 1..255 generators");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i].name == generators_[j].name) {
        throw std::invalid_argument("duplicate generator name: " +
                                    generators_[i].name);
      }
    }
  }
}

std::size_t GradedAlphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

bool operator==(const GradedAlphabet& a, const GradedAlphabet& b) {
  if (a.generators_.size() != b.generators_.size()) return false;
  for (std::size_t i = 0; i < a.generators_.size(); ++i) {
    if (a.generators_[i].name != b.generators_[i].name ||
        a.generators_[i].degree != b.generators_[i].degree) {
      return false;
    }
  }
  return true;
}

const GradedAlphabet& GradedAlphabet::xb() {
  static const GradedAlphabet alphabet({{"x", 0}, {"β", -1}});
  return alphabet;
}

const GradedAlphabet& GradedAlphabet::abx() {
  static const GradedAlphabet alphabet({{"a", -1}, {"b", -1}, {"x", 0}});
  return alphabet;
}

int word_degree(const GradedAlphabet& alphabet, const Word& word) {
  int degree = 0;
  for (auto letter : word) degree += alphabet.gen(letter).degree;
  return degree;
}

std::string word_label(const GradedAlphabet& alphabet, const Word& word) {
  std::string label;
  for (auto letter : word) label += alphabet.gen(letter).name;
  return label;
}

std::size_t letter_count(const Word& word, std::uint8_t letter) {
  return static_cast<std::size_t>(std::count(word.begin(), word.end(), letter));
}

}  // namespace dgli
