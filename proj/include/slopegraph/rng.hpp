#ifndef SLOPEGRAPH_RNG_HPP
#define SLOPEGRAPH_RNG_HPP

#include <cstdint>

namespace slopegraph {

// Seeded, splittable random stream (xoshiro256++ state derived from
// (seed, stream_id) via splitmix64). The same (seed, stream_id) pair always
// reproduces the same variate sequence; distinct stream_ids give streams of
// independent quality, so replications can run in any order or in parallel.
// A single RngStream instance must not be shared across threads.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();

  // Uniform on the open interval (0, 1).
  double uniform();

  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal();

  // Gamma(shape, rate) via Marsaglia-Tsang rejection, with the usual
  // power-of-uniform boost for shape < 1. Throws std::domain_error on
  // non-positive parameters.
  double gamma(double shape, double rate);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_[4];
  double spare_normal_ = 0.0;
  bool has_spare_normal_ = false;
};

}  // namespace slopegraph

#endif
