#include "dgli/linalg.hpp"

#include <map>
#include <stdexcept>

namespace dgli {
namespace {

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
};

// Reduced row echelon form, pivoting on the first nonzero entry of each
// column in order; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(Matrix& m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols; ++c) {
        std::swap(m.at(pivot, c), m.at(row, c));
      }
    }
    const Rational inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Rational factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c) {
        m.at(r, c) -= factor * m.at(row, c);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

// Word coordinates shared by a family; also validates compatibility.
std::map<Word, std::size_t> coordinate_index(
    const std::vector<const Element*>& elements) {
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (!(elements[i]->alphabet() == elements[0]->alphabet()) ||
        elements[i]->truncation() != elements[0]->truncation()) {
      throw std::invalid_argument("family mixes alphabets or truncations");
    }
  }
  std::map<Word, std::size_t> index;
  for (const Element* e : elements) {
    for (const auto& [word, c] : e->terms()) index.emplace(word, 0);
  }
  std::size_t next = 0;
  for (auto& [word, slot] : index) slot = next++;
  return index;
}

}  // namespace

std::optional<Rational> proportionality(const Element& c, const Element& d) {
  if (c.is_zero()) return Rational();
  if (d.is_zero()) return std::nullopt;
  const auto& [word, dc] = *d.terms().begin();
  const Rational eta = c.coeff(word) / dc;
  Element scaled = d;
  scaled *= eta;
  return scaled == c ? std::optional<Rational>(eta) : std::nullopt;
}

std::size_t rank(const std::vector<Element>& elements) {
  if (elements.empty()) return 0;
  std::vector<const Element*> ptrs;
  for (const auto& e : elements) ptrs.push_back(&e);
  const auto index = coordinate_index(ptrs);
  Matrix m(elements.size(), index.size());
  for (std::size_t r = 0; r < elements.size(); ++r) {
    for (const auto& [word, coeff] : elements[r].terms()) {
      m.at(r, index.at(word)) = coeff;
    }
  }
  return reduce(m).size();
}

std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<Element>& basis, const Element& target) {
  if (basis.empty()) {
    if (target.is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  std::vector<const Element*> ptrs;
  for (const auto& e : basis) ptrs.push_back(&e);
  ptrs.push_back(&target);
  const auto index = coordinate_index(ptrs);

  // Rows are word coordinates, columns the basis plus the target.
  Matrix m(index.size(), basis.size() + 1);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [word, coeff] : basis[j].terms()) {
      m.at(index.at(word), j) = coeff;
    }
  }
  for (const auto& [word, coeff] : target.terms()) {
    m.at(index.at(word), basis.size()) = coeff;
  }

  const auto pivot_cols = reduce(m);
  std::vector<Rational> coords(basis.size());
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    if (pivot_cols[r] == basis.size()) return std::nullopt;  // inconsistent
    coords[pivot_cols[r]] = m.at(r, basis.size());
  }
  return coords;
}

std::vector<std::vector<Rational>> kernel(
    const std::vector<Element>& elements) {
  if (elements.empty()) return {};
  std::vector<const Element*> ptrs;
  for (const auto& e : elements) ptrs.push_back(&e);
  const auto index = coordinate_index(ptrs);

  Matrix m(index.size() == 0 ? 1 : index.size(), elements.size());
  for (std::size_t j = 0; j < elements.size(); ++j) {
    for (const auto& [word, coeff] : elements[j].terms()) {
      m.at(index.at(word), j) = coeff;
    }
  }

  const auto pivot_cols = reduce(m);
  std::vector<bool> is_pivot(elements.size(), false);
  for (auto col : pivot_cols) is_pivot[col] = true;

  std::vector<std::vector<Rational>> result;
  for (std::size_t free = 0; free < elements.size(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> vec(elements.size());
    vec[free] = Rational(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      vec[pivot_cols[r]] = -m.at(r, free);
    }
    result.push_back(std::move(vec));
  }
  return result;
}

}  // namespace dgli
