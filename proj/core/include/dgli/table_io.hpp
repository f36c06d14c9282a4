#pragma once

#include <string>

#include "dgli/bernoulli.hpp"
#include "dgli/vtable.hpp"

namespace dgli {

// CSV uses a common "n,k,value" header for both tables; the Bernoulli
// sequence has no k index, so its k field is left empty. Values are the
// canonical "p/q" strings. Markdown cells use the short display form and
// leave cells outside the v band blank.

std::string v_table_csv(const VTable& table, int max_n);
std::string v_table_markdown(const VTable& table, int max_n);
std::string v_table_json(const VTable& table, int max_n);

std::string bernoulli_csv(const BernoulliTable& table, int max_n);
std::string bernoulli_markdown(const BernoulliTable& table, int max_n);
std::string bernoulli_json(const BernoulliTable& table, int max_n);

}  // namespace dgli
