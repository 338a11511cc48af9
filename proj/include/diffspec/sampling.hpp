#ifndef DIFFSPEC_SAMPLING_HPP
#define DIFFSPEC_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace diffspec {

enum class LawKind { Gaussian, Gamma, CenteredGamma, Beta };

/// Law of one sampled coordinate. CenteredGamma(nu) is Gamma(nu) - nu, the
/// centered law used by the mixed homogeneous-sum setting.
struct Law {
    LawKind kind = LawKind::Gaussian;
    double nu = 0.0;
    double alpha = 0.0;
    double beta = 0.0;

    static Law gaussian() { return {}; }
    static Law gamma(double nu);
    static Law centered_gamma(double nu);
    static Law beta_law(double alpha, double beta);

    std::string describe() const;
};

/// Coordinate laws given as a cycle: coordinate i uses laws[i mod size].
struct CoordinateLawSpec {
    std::vector<Law> cycle;
    const Law& law(std::int64_t coordinate) const { return cycle[static_cast<std::size_t>(coordinate % static_cast<std::int64_t>(cycle.size()))]; }
};

/// Deterministic random stream: a seeded mt19937_64 with explicitly coded
/// transformations, so the produced doubles depend only on the seed (never on
/// the standard library's distribution implementations).
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    double uniform();           // [0, 1)
    double normal();            // polar method, spare cached
    double gamma(double shape); // Marsaglia-Tsang squeeze, shape > 0
    double beta(double a, double b);
    double draw(const Law& law);

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Stream seed for one chunk: a splitmix64 mix of the base seed and the chunk
/// index, so chunks are independent and reproducible in isolation.
std::uint64_t chunk_seed(std::uint64_t base, std::uint64_t chunk_index);

/// Sampling plan: `sample_count` rows of `dimension` i.i.d. coordinates. Rows
/// are generated in chunks of `chunk_size`; the chunk boundaries are part of
/// the configuration, so results never depend on scheduling or worker count.
struct SampleConfig {
    CoordinateLawSpec laws;
    int dimension = 1;
    std::int64_t sample_count = 0;
    std::uint64_t seed = 0;
    int chunk_size = 8192;

    void validate() const;
};

/// Row-major sample_count x dimension matrix. Deterministic in the config.
std::vector<double> sample_matrix(const SampleConfig& config);

}  // namespace diffspec

#endif
