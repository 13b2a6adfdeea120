#pragma once

#include <cstdint>
#include <vector>

namespace acttok {

// Deterministic random stream (xoshiro256**). Every stochastic piece of the
// project (parameter init, Gumbel noise, batch shuffles, synthetic motion)
// draws from an instance of this class, so a run is reproducible from its
// seed alone and independent of the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform();                    // [0, 1)
  double uniform(double lo, double hi);
  double normal();                     // standard normal (Box-Muller)
  double gumbel();                     // standard Gumbel(0, 1)
  std::size_t index(std::size_t n);    // uniform integer in [0, n)

  // Independent stream derived from this generator's seed and a salt.
  Rng fork(std::uint64_t salt) const;

  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.size() < 2) return;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
      std::size_t j = index(i + 1);
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace acttok
