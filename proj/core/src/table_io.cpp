#include "dgli/table_io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace dgli {
namespace {

using ordered_json = nlohmann::ordered_json;

void check_range(int max_n, int available) {
  if (max_n < 0 || max_n > available) {
    throw std::out_of_range("table emission range exceeds table size");
  }
}

}  // namespace

std::string v_table_csv(const VTable& table, int max_n) {
  check_range(max_n, table.max_n());
  std::ostringstream out;
  out << "n,k,value\n";
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      out << n << ',' << k << ',' << table.at(n, k).str() << '\n';
    }
  }
  return out.str();
}

std::string v_table_markdown(const VTable& table, int max_n) {
  check_range(max_n, table.max_n());
  const int cols = max_n / 2 + 1;
  std::ostringstream out;
  out << "| n |";
  for (int k = 0; k < cols; ++k) out << " v_{n," << k << "} |";
  out << "\n|---|";
  for (int k = 0; k < cols; ++k) out << "---|";
  out << '\n';
  for (int n = 0; n <= max_n; ++n) {
    out << "| " << n << " |";
    for (int k = 0; k < cols; ++k) {
      if (2 * k <= n) {
        out << ' ' << table.at(n, k).display() << " |";
      } else {
        out << "  |";
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string v_table_json(const VTable& table, int max_n) {
  check_range(max_n, table.max_n());
  ordered_json doc;
  doc["table"] = "v";
  doc["max"] = max_n;
  doc["entries"] = ordered_json::array();
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      doc["entries"].push_back(
          {{"n", n}, {"k", k}, {"value", table.at(n, k).str()}});
    }
  }
  return doc.dump();
}

std::string bernoulli_csv(const BernoulliTable& table, int max_n) {
  check_range(max_n, static_cast<int>(table.max_index()));
  std::ostringstream out;
  out << "n,k,value\n";
  for (int n = 0; n <= max_n; ++n) {
    out << n << ",," << table.at(static_cast<std::size_t>(n)).str() << '\n';
  }
  return out.str();
}

std::string bernoulli_markdown(const BernoulliTable& table, int max_n) {
  check_range(max_n, static_cast<int>(table.max_index()));
  std::ostringstream out;
  out << "| n | B_n |\n|---|---|\n";
  for (int n = 0; n <= max_n; ++n) {
    out << "| " << n << " | "
        << table.at(static_cast<std::size_t>(n)).display() << " |\n";
  }
  return out.str();
}

std::string bernoulli_json(const BernoulliTable& table, int max_n) {
  check_range(max_n, static_cast<int>(table.max_index()));
  ordered_json doc;
  doc["table"] = "bernoulli";
  doc["max"] = max_n;
  doc["entries"] = ordered_json::array();
  for (int n = 0; n <= max_n; ++n) {
    doc["entries"].push_back(
        {{"n", n}, {"value", table.at(static_cast<std::size_t>(n)).str()}});
  }
  return doc.dump();
}

}  // namespace dgli
