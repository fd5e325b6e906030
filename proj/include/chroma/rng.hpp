#ifndef CHROMA_RNG_HPP
#define CHROMA_RNG_HPP

#include <cstdint>
#include <random>

namespace chroma {

// splitmix64, used to derive independent stream seeds from one master seed
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seedable generator with helpers that avoid std::uniform_int_distribution,
// whose output is not pinned down by the standard across implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n); n > 0
    std::uint64_t below(std::uint64_t n)
    {
        // rejection sampling to kill modulo bias
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return unit() < p; }

private:
    std::mt19937_64 eng_;
};

// per-subsystem stream ids
enum class RngStream : std::uint64_t {
    clique = 1,
    reorder = 2,
};

inline Rng make_rng(std::uint64_t master_seed, RngStream stream)
{
    return Rng(split_seed(master_seed, static_cast<std::uint64_t>(stream)));
}

} // namespace chroma

#endif
