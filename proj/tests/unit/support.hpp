#ifndef SYMREF_TESTS_SUPPORT_HPP
#define SYMREF_TESTS_SUPPORT_HPP

#include <random>

#include "symref/conditions.hpp"

namespace support {

inline const symref::PaperModel& model() {
  static const symref::PaperModel m = symref::PaperModel::build();
  return m;
}

inline symref::Rational random_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  const int n = num(rng);
  return symref::ratio(n, den(rng));
}

inline symref::Rational random_nonzero_rational(std::mt19937_64& rng, int bound = 9) {
  symref::Rational x;
  do x = random_rational(rng, bound);
  while (symref::is_zero(x));
  return x;
}

inline symref::ReflectionParameter random_parameter(std::mt19937_64& rng) {
  symref::ReflectionParameter c;
  for (auto& x : c.c) x = random_rational(rng);
  return c;
}

/// Random element of the span of the character table rows, with small integer weights.
inline symref::ClassFunction random_character(std::mt19937_64& rng) {
  const auto& t = model().table;
  std::uniform_int_distribution<int> w(0, 2);
  symref::ClassFunction chi{std::vector<std::int64_t>(t.class_data.count(), 0)};
  for (const auto& row : t.rows) {
    const int k = w(rng);
    for (std::size_t c = 0; c < chi.values.size(); ++c) chi.values[c] += k * row[c];
  }
  return chi;
}

}  // namespace support

#endif  // SYMREF_TESTS_SUPPORT_HPP
