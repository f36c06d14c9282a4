#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dgli {

struct Generator {
  std::string name;
  int degree = 0;
};

// Ordered list of graded generators. Words store generator indices, so the
// alphabet order fixes the word order everywhere (maps, serialization,
// pivoting).
class GradedAlphabet {
 public:
  explicit GradedAlphabet(std::vector<Generator> generators);

  std::size_t size() const { return generators_.size(); }
  const Generator& gen(std::size_t i) const { return generators_.at(i); }
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const GradedAlphabet& a, const GradedAlphabet& b);

  // The two working alphabets: x of degree 0 with one odd generator, and
  // the endpoint presentation with two odd generators a, b.
  static const GradedAlphabet& xb();
  static const GradedAlphabet& abx();

 private:
  std::vector<Generator> generators_;
};

using Word = std::vector<std::uint8_t>;

int word_degree(const GradedAlphabet& alphabet, const Word& word);
std::string word_label(const GradedAlphabet& alphabet, const Word& word);
std::size_t letter_count(const Word& word, std::uint8_t letter);

}  // namespace dgli
