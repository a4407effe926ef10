#pragma once

#include <random>
#include <vector>

#include "klmprep/core_state.hpp"
#include "klmprep/klm_model.hpp"

namespace klm::testing {

inline std::vector<Amp> random_raw_amplitudes(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Amp> raw;
  raw.reserve(count);
  for (int i = 0; i < count; ++i) raw.emplace_back(u(rng), u(rng));
  return raw;
}

inline KlmSpec random_spec(std::mt19937_64& rng, int n) {
  return make_spec(random_raw_amplitudes(rng, n + 1));
}

inline StateVector random_state(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Amp> amps(std::size_t{1} << n);
  double norm_sq = 0.0;
  for (Amp& a : amps) {
    a = Amp{u(rng), u(rng)};
    norm_sq += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (Amp& a : amps) a *= inv;
  return StateVector::from_amplitudes(n, std::move(amps));
}

}  // namespace klm::testing
