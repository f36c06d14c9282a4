#include "dgli/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "dgli/identities.hpp"
#include "dgli/models.hpp"

namespace dgli::verify {
namespace {

using ordered_json = nlohmann::ordered_json;
using Params = std::map<std::string, long>;

struct JobOutcome {
  bool ok = false;
  std::string witness_json;
};

struct Job {
  std::string name;
  Params params;
  std::function<JobOutcome()> run;
};

struct CheckDef {
  Params defaults;
  std::function<void(const std::string&, const Params&, std::vector<Job>&)>
      expand;
};

JobOutcome pass() { return {true, {}}; }
JobOutcome fail(const ordered_json& witness) { return {false, witness.dump()}; }

// ---- randomized inputs ----------------------------------------------------

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

Word random_word(std::mt19937_64& rng, std::size_t alphabet_size,
                 std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<int> letter(
      0, static_cast<int>(alphabet_size) - 1);
  Word w(len_dist(rng));
  for (auto& l : w) l = static_cast<std::uint8_t>(letter(rng));
  return w;
}

Element random_element(std::mt19937_64& rng, const GradedAlphabet& alphabet,
                       int truncation, std::size_t max_terms,
                       std::size_t max_len) {
  Element e(alphabet, truncation);
  std::uniform_int_distribution<std::size_t> term_dist(1, max_terms);
  const auto terms = term_dist(rng);
  for (std::size_t t = 0; t < terms; ++t) {
    e.add_term(random_word(rng, alphabet.size(), 1, max_len),
               random_rational(rng));
  }
  return e;
}

// Word with exactly odd_count odd letters, padded with even letters when the
// alphabet has any; used to build degree-homogeneous values.
Word random_graded_word(std::mt19937_64& rng, const GradedAlphabet& alphabet,
                        std::size_t odd_count, std::size_t max_len) {
  std::vector<std::uint8_t> odd_letters;
  std::vector<std::uint8_t> even_letters;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    auto& bucket = (alphabet.gen(i).degree & 1) != 0 ? odd_letters : even_letters;
    bucket.push_back(static_cast<std::uint8_t>(i));
  }
  Word w;
  for (std::size_t i = 0; i < odd_count; ++i) {
    w.push_back(odd_letters[rng() % odd_letters.size()]);
  }
  if (!even_letters.empty() && max_len > odd_count) {
    std::uniform_int_distribution<std::size_t> extra(0, max_len - odd_count);
    const auto pad = extra(rng);
    for (std::size_t i = 0; i < pad; ++i) {
      w.push_back(even_letters[rng() % even_letters.size()]);
    }
  }
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

// Random derivation of degree -1 with homogeneous generator values.
Derivation random_derivation(std::mt19937_64& rng,
                             const GradedAlphabet& alphabet, int truncation,
                             std::size_t max_len) {
  std::vector<Element> values;
  for (std::size_t g = 0; g < alphabet.size(); ++g) {
    // value degree = gen degree - 1; with degrees in {0, -1} the number of
    // odd letters needed is 1 - gen degree.
    const auto odd_count = static_cast<std::size_t>(1 - alphabet.gen(g).degree);
    Element v(alphabet, truncation);
    std::uniform_int_distribution<std::size_t> term_dist(0, 2);
    const auto terms = term_dist(rng);
    for (std::size_t t = 0; t < terms; ++t) {
      v.add_term(random_graded_word(rng, alphabet, odd_count, max_len),
                 random_rational(rng));
    }
    values.push_back(std::move(v));
  }
  return Derivation(alphabet, -1, std::move(values));
}

Element truncate_to(const Element& e, int truncation) {
  Element r(e.alphabet(), truncation);
  for (const auto& [word, c] : e.terms()) r.add_term(word, c);
  return r;
}

const GradedAlphabet& pick_alphabet(std::mt19937_64& rng) {
  return rng() % 2 == 0 ? GradedAlphabet::xb() : GradedAlphabet::abx();
}

ordered_json element_witness(const Element& e) {
  return ordered_json::parse(element_json(e));
}

// ---- check registry -------------------------------------------------------

void require(bool condition, const std::string& message) {
  if (!condition) throw ConfigError(message);
}

long sweep_max(const Params& p) { return p.at("max"); }

const std::map<std::string, CheckDef>& registry();

// Frozen low rows of the v table, display form, k = 0 .. n/2.
const std::vector<std::vector<const char*>>& frozen_v_rows() {
  static const std::vector<std::vector<const char*>> rows = {
      {"1"},
      {"1/2"},
      {"1/2", "-1"},
      {"1/2", "-3/2"},
      {"1/2", "-2", "1"},
      {"1/2", "-5/2", "5/2"},
      {"1/2", "-3", "9/2", "-1"},
      {"1/2", "-7/2", "7", "-7/2"},
  };
  return rows;
}

void expand_sequences(std::map<std::string, CheckDef>& defs) {
  defs["bernoulli_odd"] = {
      {{"max", 25}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          BernoulliTable table(static_cast<std::size_t>(sweep_max(p)));
          for (std::size_t n = 3; n <= table.max_index(); n += 2) {
            if (!table.at(n).is_zero()) {
              return fail({{"n", n}, {"value", table.at(n).str()}});
            }
          }
          return pass();
        }});
      }};

  defs["euler"] = {
      {{"max", 30}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        for (long n = 4; n <= sweep_max(p); n += 2) {
          jobs.push_back({name, {{"n", n}}, [n] {
            BernoulliTable table(static_cast<std::size_t>(n));
            const auto sides = euler_identity_sides(table, static_cast<int>(n));
            if (sides.holds()) return pass();
            return fail({{"n", n},
                         {"lhs", sides.lhs.str()},
                         {"rhs", sides.rhs.str()}});
          }});
        }
      }};

  defs["v_table"] = {
      {},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [] {
          const auto& rows = frozen_v_rows();
          VTable table(static_cast<int>(rows.size()) - 1);
          for (int n = 0; n < static_cast<int>(rows.size()); ++n) {
            for (int k = 0; k <= 3; ++k) {
              const auto& expected_row = rows[static_cast<std::size_t>(n)];
              const std::string expected =
                  k < static_cast<int>(expected_row.size())
                      ? expected_row[static_cast<std::size_t>(k)]
                      : "0";
              if (table.at(n, k).display() != expected) {
                return fail({{"n", n},
                             {"k", k},
                             {"expected", expected},
                             {"actual", table.at(n, k).display()}});
              }
            }
          }
          return pass();
        }});
      }};

  defs["v_closed_form"] = {
      {{"max", 60}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        for (long n = 0; n <= sweep_max(p); ++n) {
          jobs.push_back({name, {{"n", n}}, [n] {
            VTable table(static_cast<int>(n));
            for (int k = 0; k <= static_cast<int>(n) / 2 + 2; ++k) {
              if (table.at(static_cast<int>(n), k) !=
                  v_closed_form(static_cast<int>(n), k)) {
                return fail({{"n", n},
                             {"k", k},
                             {"recurrence", table.at(static_cast<int>(n), k).str()},
                             {"closed_form", v_closed_form(static_cast<int>(n), k).str()}});
              }
            }
            return pass();
          }});
        }
      }};

  defs["diagonal_sum"] = {
      {{"max", 30}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        for (long n = 0; n <= sweep_max(p); ++n) {
          jobs.push_back({name, {{"n", n}}, [n] {
            VTable table(static_cast<int>(2 * n));
            const Rational expected = n == 0   ? Rational(1)
                                      : n == 1 ? Rational(-1, 2)
                                               : Rational();
            const Rational actual = table.diagonal_sum(static_cast<int>(n));
            if (actual == expected) return pass();
            return fail({{"n", n},
                         {"expected", expected.str()},
                         {"actual", actual.str()}});
          }});
        }
      }};

  defs["column_sum"] = {
      {{"max", 40}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        for (long n = 2; n <= sweep_max(p); ++n) {
          jobs.push_back({name, {{"n", n}}, [n] {
            VTable table(static_cast<int>(n));
            // k = 0 is outside the identity's domain by contract.
            if (column_sum_identity_holds(table, static_cast<int>(n), 0)) {
              return fail({{"n", n}, {"k", 0}, {"note", "k=0 must be rejected"}});
            }
            for (int k = 1; 2 * k <= n; ++k) {
              if (!column_sum_identity_holds(table, static_cast<int>(n), k)) {
                return fail({{"n", n}, {"k", k}});
              }
            }
            return pass();
          }});
        }
      }};

  defs["iterated_sum"] = {
      {{"max_k", 8}, {"max_n", 20}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        const long max_n = p.at("max_n");
        for (long k = 0; k <= p.at("max_k"); ++k) {
          jobs.push_back({name, {{"k", k}}, [k, max_n] {
            for (long n = 1; n <= max_n; ++n) {
              if (!iterated_sum_identity_holds(static_cast<int>(k), n)) {
                return fail({{"k", k}, {"n", n}});
              }
            }
            return pass();
          }});
        }
      }};

  defs["bernoulli_v_relation"] = {
      {{"max", 20}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        for (long n = 4; n <= sweep_max(p); n += 2) {
          for (long k = 0; 2 * k <= n - 1; ++k) {
            jobs.push_back({name, {{"n", n}, {"k", k}}, [n, k] {
              BernoulliTable bernoulli(static_cast<std::size_t>(n));
              VTable v(static_cast<int>(n));
              const auto sides = bernoulli_v_relation_sides(
                  bernoulli, v, static_cast<int>(n), static_cast<int>(k));
              if (sides.holds()) return pass();
              return fail({{"n", n},
                           {"k", k},
                           {"lhs", sides.lhs.str()},
                           {"rhs", sides.rhs.str()}});
            }});
          }
        }
      }};
}

void expand_lie(std::map<std::string, CheckDef>& defs) {
  defs["antisymmetry"] = {
      {{"cases", 200}, {"seed", 20240901}, {"max_len", 4}, {"truncation", 10}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          std::mt19937_64 rng(static_cast<std::uint64_t>(p.at("seed")));
          const int trunc = static_cast<int>(p.at("truncation"));
          const auto max_len = static_cast<std::size_t>(p.at("max_len"));
          for (long c = 0; c < p.at("cases"); ++c) {
            const auto& alphabet = pick_alphabet(rng);
            const Element u = Element::from_word(
                alphabet, random_word(rng, alphabet.size(), 1, max_len),
                random_rational(rng), trunc);
            const Element v = Element::from_word(
                alphabet, random_word(rng, alphabet.size(), 1, max_len),
                random_rational(rng), trunc);
            const int du = u.is_zero() ? 0 : word_degree(alphabet, u.terms().begin()->first);
            const int dv = v.is_zero() ? 0 : word_degree(alphabet, v.terms().begin()->first);
            const Rational sign((du & 1) != 0 && (dv & 1) != 0 ? -1 : 1);
            if (!elem_combine(Rational(1), bracket(u, v), sign, bracket(v, u))
                     .is_zero()) {
              return fail({{"case", c},
                           {"u", element_witness(u)},
                           {"v", element_witness(v)}});
            }
          }
          return pass();
        }});
      }};

  defs["jacobi"] = {
      {{"cases", 200}, {"seed", 20240902}, {"max_len", 3}, {"truncation", 12}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          std::mt19937_64 rng(static_cast<std::uint64_t>(p.at("seed")));
          const int trunc = static_cast<int>(p.at("truncation"));
          const auto max_len = static_cast<std::size_t>(p.at("max_len"));
          for (long c = 0; c < p.at("cases"); ++c) {
            const auto& alphabet = pick_alphabet(rng);
            auto word_elem = [&] {
              return Element::from_word(
                  alphabet, random_word(rng, alphabet.size(), 1, max_len),
                  random_rational(rng), trunc);
            };
            const Element u = word_elem();
            const Element v = word_elem();
            const Element w = word_elem();
            const int du = u.is_zero() ? 0 : word_degree(alphabet, u.terms().begin()->first);
            const int dv = v.is_zero() ? 0 : word_degree(alphabet, v.terms().begin()->first);
            const Rational sign((du & 1) != 0 && (dv & 1) != 0 ? -1 : 1);
            const Element lhs = bracket(u, bracket(v, w));
            const Element rhs = bracket(bracket(u, v), w) +
                                sign * bracket(v, bracket(u, w));
            if (lhs != rhs) {
              return fail({{"case", c},
                           {"u", element_witness(u)},
                           {"v", element_witness(v)},
                           {"w", element_witness(w)}});
            }
          }
          return pass();
        }});
      }};

  defs["bilinearity"] = {
      {{"cases", 200}, {"seed", 20240903}, {"max_len", 4}, {"truncation", 10}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          std::mt19937_64 rng(static_cast<std::uint64_t>(p.at("seed")));
          const int trunc = static_cast<int>(p.at("truncation"));
          const auto max_len = static_cast<std::size_t>(p.at("max_len"));
          for (long c = 0; c < p.at("cases"); ++c) {
            const auto& alphabet = pick_alphabet(rng);
            const Element u = random_element(rng, alphabet, trunc, 3, max_len);
            const Element u2 = random_element(rng, alphabet, trunc, 3, max_len);
            const Element v = random_element(rng, alphabet, trunc, 3, max_len);
            const Rational a = random_rational(rng);
            const Rational b = random_rational(rng);
            const Element left = bracket(elem_combine(a, u, b, u2), v);
            const Element right =
                elem_combine(a, bracket(u, v), b, bracket(u2, v));
            if (left != right) return fail({{"case", c}, {"side", "left"}});
            const Element left2 = bracket(v, elem_combine(a, u, b, u2));
            const Element right2 =
                elem_combine(a, bracket(v, u), b, bracket(v, u2));
            if (left2 != right2) return fail({{"case", c}, {"side", "right"}});
          }
          return pass();
        }});
      }};

  defs["truncation_coherence"] = {
      {{"cases", 200}, {"seed", 20240904}, {"max_len", 5}, {"truncation", 8}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          std::mt19937_64 rng(static_cast<std::uint64_t>(p.at("seed")));
          const int trunc = static_cast<int>(p.at("truncation"));
          const auto max_len = static_cast<std::size_t>(p.at("max_len"));
          for (long c = 0; c < p.at("cases"); ++c) {
            const auto& alphabet = pick_alphabet(rng);
            const Element u = random_element(rng, alphabet, trunc, 3, max_len);
            const Element v = random_element(rng, alphabet, trunc, 3, max_len);
            const int lower = trunc - 3;
            const Element coarse = truncate_to(bracket(u, v), lower);
            const Element fine =
                bracket(truncate_to(u, lower), truncate_to(v, lower));
            if (coarse != fine) return fail({{"case", c}, {"op", "bracket"}});
            const Element coarse_t = truncate_to(tensor_product(u, v), lower);
            const Element fine_t = tensor_product(truncate_to(u, lower),
                                                  truncate_to(v, lower));
            if (coarse_t != fine_t) return fail({{"case", c}, {"op", "tensor"}});
            const Element full = bracket(u, v);
            for (const auto& [word, coeff] : full.terms()) {
              if (word.size() > static_cast<std::size_t>(trunc)) {
                return fail({{"case", c}, {"op", "overflow"}});
              }
            }
          }
          return pass();
        }});
      }};

  defs["mu_support"] = {
      {{"max", 12}, {"truncation", 16}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        const long trunc = p.at("truncation");
        for (long n = 0; n <= sweep_max(p); ++n) {
          jobs.push_back({name, {{"n", n}}, [n, trunc] {
            const auto& xb = GradedAlphabet::xb();
            const Element beta = Element::generator(xb, xb.index_of("β"),
                                                    static_cast<int>(trunc));
            for (unsigned k = 0; 2 * k <= static_cast<unsigned>(n); ++k) {
              const Element m = mu(static_cast<unsigned>(n), k, beta);
              if (!xb_bidegree_support(m, static_cast<std::size_t>(n), 2)) {
                return fail({{"n", n}, {"k", k}});
              }
            }
            return pass();
          }});
        }
      }};

  defs["mu_independence"] = {
      {{"max", 14}, {"truncation", 16}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        const long trunc = p.at("truncation");
        for (long n = 1; n <= sweep_max(p); ++n) {
          jobs.push_back({name, {{"n", n}}, [n, trunc] {
            if (mu_independent(static_cast<unsigned>(n),
                               static_cast<int>(trunc))) {
              return pass();
            }
            return fail({{"n", n}});
          }});
        }
      }};

  defs["adjoint_composition"] = {
      {{"max_pq", 14}, {"truncation", 16}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        const long trunc = p.at("truncation");
        for (long q = 0; q <= p.at("max_pq"); ++q) {
          for (long pp = 0; pp + q <= p.at("max_pq"); ++pp) {
            jobs.push_back({name, {{"p", pp}, {"q", q}}, [pp, q, trunc] {
              const auto& xb = GradedAlphabet::xb();
              const Element beta = Element::generator(xb, xb.index_of("β"),
                                                      static_cast<int>(trunc));
              VTable v(static_cast<int>(pp + q));
              const auto report = adjoint_composition_report(
                  v, static_cast<unsigned>(pp), static_cast<unsigned>(q), beta);
              if (report.ok) return pass();
              return fail({{"p", pp},
                           {"q", q},
                           {"lhs", element_witness(report.lhs)},
                           {"rhs", element_witness(report.rhs)}});
            }});
          }
        }
      }};

  defs["leibniz"] = {
      {{"cases", 200}, {"seed", 20240905}, {"max_len", 4}, {"truncation", 10}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          std::mt19937_64 rng(static_cast<std::uint64_t>(p.at("seed")));
          const int trunc = static_cast<int>(p.at("truncation"));
          const auto max_len = static_cast<std::size_t>(p.at("max_len"));
          for (long c = 0; c < p.at("cases"); ++c) {
            const auto& alphabet = pick_alphabet(rng);
            const Derivation d = random_derivation(rng, alphabet, trunc, max_len);
            const Element u = Element::from_word(
                alphabet, random_word(rng, alphabet.size(), 1, max_len),
                random_rational(rng), trunc);
            const Element v = Element::from_word(
                alphabet, random_word(rng, alphabet.size(), 1, max_len),
                random_rational(rng), trunc);
            const int du = u.is_zero() ? 0 : word_degree(alphabet, u.terms().begin()->first);
            const Rational sign((du & 1) != 0 ? -1 : 1);
            const Element lhs = derive(d, tensor_product(u, v));
            const Element rhs =
                elem_combine(Rational(1), tensor_product(derive(d, u), v), sign,
                             tensor_product(u, derive(d, v)));
            if (lhs != rhs) {
              return fail({{"case", c},
                           {"u", element_witness(u)},
                           {"v", element_witness(v)}});
            }
          }
          return pass();
        }});
      }};

  defs["derivation_bracket"] = {
      {{"cases", 100}, {"seed", 20240906}, {"max_len", 3}, {"truncation", 10}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          std::mt19937_64 rng(static_cast<std::uint64_t>(p.at("seed")));
          const int trunc = static_cast<int>(p.at("truncation"));
          const auto max_len = static_cast<std::size_t>(p.at("max_len"));
          for (long c = 0; c < p.at("cases"); ++c) {
            const auto& alphabet = pick_alphabet(rng);
            const Derivation d1 = random_derivation(rng, alphabet, trunc, max_len);
            const Derivation d2 = random_derivation(rng, alphabet, trunc, max_len);
            const Derivation db = derivation_bracket(d1, d2);
            const Element u = Element::from_word(
                alphabet, random_word(rng, alphabet.size(), 1, max_len),
                random_rational(rng), trunc);
            // both derivations are odd, so the bracket is an anticommutator
            const Element expected = compose(d1, d2, u) + compose(d2, d1, u);
            if (derive(db, u) != expected) {
              return fail({{"case", c}, {"u", element_witness(u)}});
            }
          }
          return pass();
        }});
      }};

  defs["d0_squared"] = {
      {{"cases", 200}, {"seed", 20240907}, {"max_len", 6}, {"truncation", 10}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          std::mt19937_64 rng(static_cast<std::uint64_t>(p.at("seed")));
          const int trunc = static_cast<int>(p.at("truncation"));
          const auto max_len = static_cast<std::size_t>(p.at("max_len"));
          const Derivation d0x = d0_xb(trunc);
          const Derivation d0e = d0_abx(trunc);
          for (long c = 0; c < p.at("cases"); ++c) {
            const bool use_xb = rng() % 2 == 0;
            const auto& alphabet =
                use_xb ? GradedAlphabet::xb() : GradedAlphabet::abx();
            const Element u = random_element(rng, alphabet, trunc, 3, max_len);
            const Element square =
                use_xb ? compose(d0x, d0x, u) : compose(d0e, d0e, u);
            if (!square.is_zero()) {
              return fail({{"case", c}, {"u", element_witness(u)}});
            }
          }
          return pass();
        }});
      }};

  defs["theta_span"] = {
      {{"max_pq", 14}, {"truncation", 16}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        const long trunc = p.at("truncation");
        for (long q = 1; q <= p.at("max_pq"); ++q) {
          for (long pp = 0; pp + q <= p.at("max_pq"); ++pp) {
            jobs.push_back({name, {{"p", pp}, {"q", q}}, [pp, q, trunc] {
              const auto& xb = GradedAlphabet::xb();
              const int t = static_cast<int>(trunc);
              const Element x = Element::generator(xb, xb.index_of("x"), t);
              const Element beta = Element::generator(xb, xb.index_of("β"), t);
              const Element composed =
                  compose(theta(static_cast<unsigned>(pp), t),
                          theta(static_cast<unsigned>(q), t), x);
              const auto n = static_cast<unsigned>(pp + q - 1);
              if (!xb_bidegree_support(composed, n, 2)) {
                return fail({{"p", pp}, {"q", q}, {"reason", "support"}});
              }
              if (!solve_in_span(mu_family(n, beta), composed)) {
                return fail({{"p", pp}, {"q", q}, {"reason", "span"}});
              }
              return pass();
            }});
          }
        }
      }};

  defs["theta_composition"] = {
      {{"max_pq", 14}, {"truncation", 16}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        const long trunc = p.at("truncation");
        for (long q = 1; q <= p.at("max_pq"); ++q) {
          for (long pp = 0; pp + q <= p.at("max_pq"); ++pp) {
            jobs.push_back({name, {{"p", pp}, {"q", q}}, [pp, q, trunc] {
              VTable v(static_cast<int>(pp > q ? pp : q));
              const auto report = theta_composition_report(
                  v, static_cast<unsigned>(pp), static_cast<unsigned>(q),
                  static_cast<int>(trunc));
              if (report.span_ok && report.formula_ok) return pass();
              ordered_json witness{{"p", pp}, {"q", q}};
              witness["span_ok"] = report.span_ok;
              ordered_json computed = ordered_json::array();
              for (const auto& c : report.computed) computed.push_back(c.str());
              ordered_json predicted = ordered_json::array();
              for (const auto& c : report.predicted) predicted.push_back(c.str());
              witness["computed"] = computed;
              witness["predicted"] = predicted;
              return fail(witness);
            }});
          }
        }
      }};

  defs["acyclicity"] = {
      {{"max", 12}, {"truncation", 16}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        const long trunc = p.at("truncation");
        for (long n = 0; n <= sweep_max(p); ++n) {
          jobs.push_back({name, {{"n", n}}, [n, trunc] {
            const auto& xb = GradedAlphabet::xb();
            const int t = static_cast<int>(trunc);
            const Element beta = Element::generator(xb, xb.index_of("β"), t);
            const Derivation d0 = d0_xb(t);

            const auto family = mu_family(static_cast<unsigned>(n), beta);
            std::vector<Element> images;
            for (const auto& m : family) images.push_back(derive(d0, m));
            const auto cycles = kernel(images);
            if (cycles.size() != 1) {
              return fail({{"n", n},
                           {"reason", "cycle space dimension"},
                           {"dim", cycles.size()}});
            }

            const Element boundary = derive(
                d0, ad_pow(xb.index_of("x"), static_cast<unsigned>(n) + 1, beta));
            if (boundary.is_zero() || !derive(d0, boundary).is_zero()) {
              return fail({{"n", n}, {"reason", "boundary degenerate"}});
            }
            if (!solve_in_span(family, boundary)) {
              return fail({{"n", n}, {"reason", "boundary outside span"}});
            }

            Element cycle_elem(xb, t);
            for (std::size_t i = 0; i < family.size(); ++i) {
              cycle_elem += cycles.front()[i] * family[i];
            }
            if (!proportionality(cycle_elem, boundary)) {
              return fail({{"n", n}, {"reason", "cycle not a boundary"}});
            }
            return pass();
          }});
        }
      }};
}

void expand_models(std::map<std::string, CheckDef>& defs) {
  defs["sign_convention"] = {
      {{"truncation", 6}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          const int t = static_cast<int>(p.at("truncation"));
          const auto& xb = GradedAlphabet::xb();
          const Element x = Element::generator(xb, xb.index_of("x"), t);
          const Element beta = Element::generator(xb, xb.index_of("β"), t);
          const Element lhs =
              derive(d0_xb(t), bracket(x, bracket(x, beta)));
          const Element rhs = Rational(3, 2) * ad_pow(xb.index_of("x"), 1,
                                                      bracket(beta, beta));
          if (lhs != rhs) {
            return fail({{"which", "d0"},
                         {"lhs", element_witness(lhs)},
                         {"rhs", element_witness(rhs)}});
          }

          const auto& abx = GradedAlphabet::abx();
          const Element x2 = Element::generator(abx, abx.index_of("x"), t);
          const Element diff =
              Element::generator(abx, abx.index_of("b"), t) -
              Element::generator(abx, abx.index_of("a"), t);
          const Derivation d1 = d1_abx(t);
          const Element lhs2 = compose(d1, d1, x2);
          const Element rhs2 =
              Rational(-1, 8) *
              ad_pow(abx.index_of("x"), 1, bracket(diff, diff));
          if (lhs2 != rhs2) {
            return fail({{"which", "d1 square"},
                         {"lhs", element_witness(lhs2)},
                         {"rhs", element_witness(rhs2)}});
          }
          return pass();
        }});
      }};

  defs["bernoulli_coefficients"] = {
      {{"max", 20}, {"truncation", 22}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          const auto max = static_cast<unsigned>(sweep_max(p));
          const auto model =
              inductive_build(max, static_cast<int>(p.at("truncation")));
          BernoulliTable table(max);
          for (std::size_t i = 0; i <= max; ++i) {
            if (model.lambdas[i] != table.at(i)) {
              return fail({{"i", i},
                           {"coefficient", model.lambdas[i].str()},
                           {"bernoulli", table.at(i).str()}});
            }
          }
          return pass();
        }});
      }};

  defs["model_certificates"] = {
      {{"max", 20}, {"truncation", 22}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          const auto model = inductive_build(
              static_cast<unsigned>(sweep_max(p)),
              static_cast<int>(p.at("truncation")));
          for (const auto& cert : model.certificates) {
            const bool lambda_consistent =
                model.lambdas[cert.step] ==
                -Rational(factorial(cert.step)) * cert.eta;
            if (!cert.proportionality_ok ||
                (cert.step % 2 == 1 && !cert.cycle_was_zero) ||
                !lambda_consistent) {
              return fail({{"step", cert.step},
                           {"cycle_was_zero", cert.cycle_was_zero},
                           {"eta", cert.eta.str()},
                           {"proportionality_ok", cert.proportionality_ok}});
            }
          }
          return pass();
        }});
      }};

  defs["geometric_flatness"] = {
      {{"max", 14}, {"truncation", 16}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          const auto max = static_cast<unsigned>(sweep_max(p));
          BernoulliTable table(max);
          const auto model = IntervalModel::geometric(
              table, max, static_cast<int>(p.at("truncation")));
          const auto report = d_squared_report(model);
          if (report.ok) return pass();
          return fail({{"generator", report.generator},
                       {"length", report.failing_length},
                       {"residue", ordered_json::parse(report.residue_json)}});
        }});
      }};

  defs["cross_alphabet"] = {
      {{"max_step", 9}, {"truncation", 12}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        const long trunc = p.at("truncation");
        for (long step = 2; step <= p.at("max_step"); ++step) {
          jobs.push_back({name, {{"step", step}}, [step, trunc] {
            BernoulliTable table(static_cast<std::size_t>(step));
            std::vector<Rational> lambdas;
            for (long i = 0; i < step; ++i) {
              lambdas.push_back(table.at(static_cast<std::size_t>(i)));
            }
            if (cross_presentation_consistent(lambdas,
                                              static_cast<unsigned>(step),
                                              static_cast<int>(trunc))) {
              return pass();
            }
            return fail({{"step", step}});
          }});
        }
      }};

  defs["d1_anticommute"] = {
      {{"max", 8}, {"truncation", 12}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        const long trunc = p.at("truncation");
        for (long n = 2; n <= sweep_max(p); ++n) {
          jobs.push_back({name, {{"n", n}}, [n, trunc] {
            if (d1_anticommute_holds(static_cast<unsigned>(n),
                                     static_cast<int>(trunc))) {
              return pass();
            }
            return fail({{"n", n}});
          }});
        }
      }};

  defs["d1_restriction"] = {
      {{"truncation", 10}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        jobs.push_back({name, p, [p] {
          const int t = static_cast<int>(p.at("truncation"));
          const auto& xb = GradedAlphabet::xb();
          const Element x = Element::generator(xb, xb.index_of("x"), t);
          const Element beta = Element::generator(xb, xb.index_of("β"), t);
          const std::vector<Element> samples = {
              beta,
              x,
              bracket(x, beta),
              ad_pow(xb.index_of("x"), 2, beta),
              bracket(beta, bracket(x, beta)),
              tensor_product(x, beta),
          };
          for (std::size_t i = 0; i < samples.size(); ++i) {
            if (!d1_restriction_holds(samples[i], t)) {
              return fail({{"sample", i}});
            }
          }
          return pass();
        }});
      }};

  defs["operator_projection"] = {
      {{"max", 16}, {"truncation", 18}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        const long trunc = p.at("truncation");
        for (long n = 4; n <= sweep_max(p); n += 2) {
          for (long k = 0; 2 * k <= n - 1; ++k) {
            jobs.push_back({name, {{"n", n}, {"k", k}}, [n, k, trunc] {
              BernoulliTable table(static_cast<std::size_t>(n));
              const Rational coordinate = operator_projection_coordinate(
                  table, static_cast<unsigned>(n), static_cast<unsigned>(k),
                  static_cast<int>(trunc));
              if (coordinate.is_zero()) return pass();
              return fail({{"n", n}, {"k", k}, {"coordinate", coordinate.str()}});
            }});
          }
        }
      }};

  defs["relation_consistency"] = {
      {{"max", 16}, {"truncation", 18}},
      [](const std::string& name, const Params& p, std::vector<Job>& jobs) {
        const long trunc = p.at("truncation");
        for (long n = 4; n <= sweep_max(p); n += 2) {
          for (long k = 0; 2 * k <= n - 1; ++k) {
            jobs.push_back({name, {{"n", n}, {"k", k}}, [n, k, trunc] {
              BernoulliTable table(static_cast<std::size_t>(n));
              VTable v(static_cast<int>(n));
              const bool numeric = bernoulli_v_relation_holds(
                  table, v, static_cast<int>(n), static_cast<int>(k));
              const bool operator_side = operator_projection_zero(
                  table, static_cast<unsigned>(n), static_cast<unsigned>(k),
                  static_cast<int>(trunc));
              if (numeric == operator_side) return pass();
              return fail({{"n", n},
                           {"k", k},
                           {"numeric", numeric},
                           {"operator", operator_side}});
            }});
          }
        }
      }};
}

const std::map<std::string, CheckDef>& registry() {
  static const std::map<std::string, CheckDef> defs = [] {
    std::map<std::string, CheckDef> d;
    expand_sequences(d);
    expand_lie(d);
    expand_models(d);
    return d;
  }();
  return defs;
}

const std::map<std::string, std::vector<std::string>>& suite_groups() {
  static const std::map<std::string, std::vector<std::string>> groups = {
      {"sequences",
       {"bernoulli_odd", "euler", "v_table", "v_closed_form", "diagonal_sum",
        "column_sum", "iterated_sum", "bernoulli_v_relation"}},
      {"lie",
       {"antisymmetry", "jacobi", "bilinearity", "truncation_coherence",
        "mu_support", "mu_independence", "adjoint_composition", "leibniz",
        "derivation_bracket", "d0_squared", "theta_span", "theta_composition",
        "acyclicity"}},
      {"models",
       {"sign_convention", "bernoulli_coefficients", "model_certificates",
        "geometric_flatness", "cross_alphabet", "d1_anticommute",
        "d1_restriction", "operator_projection", "relation_consistency"}},
  };
  return groups;
}

Params merged_params(const CheckDef& def, const CheckSpec& spec) {
  Params merged = def.defaults;
  for (const auto& [key, value] : spec.params) {
    if (merged.find(key) == merged.end()) {
      throw ConfigError("unknown parameter '" + key + "' for check '" +
                        spec.name + "'");
    }
    require(value >= 0, "parameter '" + key + "' of check '" + spec.name +
                            "' must be nonnegative");
    merged[key] = value;
  }
  return merged;
}

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, def] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

const std::map<std::string, long>& check_defaults(std::string_view name) {
  const auto it = registry().find(std::string(name));
  if (it == registry().end()) {
    throw ConfigError("unknown check: " + std::string(name));
  }
  return it->second.defaults;
}

std::vector<CheckSpec> suite(std::string_view name) {
  if (name == "all") {
    std::vector<CheckSpec> specs;
    for (const auto& group : {"sequences", "lie", "models"}) {
      for (const auto& check : suite_groups().at(group)) {
        specs.push_back({check, {}, true});
      }
    }
    return specs;
  }
  const auto it = suite_groups().find(std::string(name));
  if (it == suite_groups().end()) {
    throw ConfigError("unknown suite: " + std::string(name));
  }
  std::vector<CheckSpec> specs;
  for (const auto& check : it->second) specs.push_back({check, {}, true});
  return specs;
}

VerificationReport run_suite(const std::vector<CheckSpec>& specs,
                             const RunOptions& options) {
  // Validate and expand everything before running anything.
  std::vector<Job> jobs;
  std::vector<CheckResult> results;
  for (const auto& spec : specs) {
    const auto it = registry().find(spec.name);
    if (it == registry().end()) {
      throw ConfigError("unknown check: " + spec.name);
    }
    const Params params = merged_params(it->second, spec);
    if (!spec.enabled) {
      results.push_back({spec.name, params, Status::skipped, {}, 0});
      continue;
    }
    it->second.expand(spec.name, params, jobs);
  }

  std::vector<CheckResult> job_results(jobs.size());
  std::atomic<std::size_t> cursor{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t index = cursor.fetch_add(1);
      if (index >= jobs.size()) return;
      const auto& job = jobs[index];
      CheckResult result;
      result.name = job.name;
      result.params = job.params;
      const auto start = std::chrono::steady_clock::now();
      try {
        const JobOutcome outcome = job.run();
        result.status = outcome.ok ? Status::pass : Status::fail;
        result.witness_json = outcome.witness_json;
      } catch (const std::exception& e) {
        result.status = Status::fail;
        result.witness_json = ordered_json({{"error", e.what()}}).dump();
      }
      const auto end = std::chrono::steady_clock::now();
      result.runtime_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(end - start)
              .count();
      job_results[index] = std::move(result);
    }
  };

  unsigned worker_count = options.jobs != 0
                              ? options.jobs
                              : std::max(1u, std::thread::hardware_concurrency());
  worker_count = std::min<unsigned>(
      worker_count, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < worker_count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& thread : pool) thread.join();

  for (auto& result : job_results) results.push_back(std::move(result));
  if (!options.timings) {
    for (auto& result : results) result.runtime_ms = 0;
  }
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) {
              if (a.name != b.name) return a.name < b.name;
              return a.params < b.params;
            });

  VerificationReport report;
  report.checks = std::move(results);
  report.summary.total = report.checks.size();
  for (const auto& check : report.checks) {
    if (check.status == Status::pass) ++report.summary.passed;
    if (check.status == Status::fail) ++report.summary.failed;
  }
  return report;
}

std::string emit(const VerificationReport& report, Format format) {
  if (format == Format::json) {
    ordered_json doc;
    doc["checks"] = ordered_json::array();
    for (const auto& check : report.checks) {
      ordered_json entry;
      entry["name"] = check.name;
      entry["params"] = ordered_json::object();
      for (const auto& [key, value] : check.params) entry["params"][key] = value;
      entry["status"] = std::string(to_string(check.status));
      entry["witness"] = check.witness_json.empty()
                             ? ordered_json(nullptr)
                             : ordered_json::parse(check.witness_json);
      entry["runtime_ms"] = check.runtime_ms;
      doc["checks"].push_back(std::move(entry));
    }
    doc["summary"] = {{"total", report.summary.total},
                      {"passed", report.summary.passed},
                      {"failed", report.summary.failed}};
    return doc.dump();
  }

  auto params_string = [](const Params& params) {
    std::string s;
    for (const auto& [key, value] : params) {
      if (!s.empty()) s += ';';
      s += key + "=" + std::to_string(value);
    }
    return s;
  };

  std::string out;
  if (format == Format::csv) {
    out += "name,params,status,runtime_ms\n";
    for (const auto& check : report.checks) {
      out += check.name + "," + params_string(check.params) + "," +
             std::string(to_string(check.status)) + "," +
             std::to_string(check.runtime_ms) + "\n";
    }
    return out;
  }

  out += "| check | params | status | runtime_ms |\n|---|---|---|---|\n";
  for (const auto& check : report.checks) {
    out += "| " + check.name + " | " + params_string(check.params) + " | " +
           std::string(to_string(check.status)) + " | " +
           std::to_string(check.runtime_ms) + " |\n";
  }
  out += "\ntotal " + std::to_string(report.summary.total) + ", passed " +
         std::to_string(report.summary.passed) + ", failed " +
         std::to_string(report.summary.failed) + "\n";
  return out;
}

}  // namespace dgli::verify
