#include "hawkes/rng.hpp"

#include <cmath>

namespace hawkes {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return splitmix64(master ^ splitmix64(index + 0x9E3779B97F4A7C15ULL));
}

double Rng::exponential(double rate) noexcept {
    return -std::log(uniform_open()) / rate;
}

}  // namespace hawkes
