#include "sicsearch/rng.hpp"

#include <cmath>

namespace sic {

namespace {

// splitmix64 step
std::uint64_t mix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) {
    // decorrelate the two words before they become the running state
    std::uint64_t s = seed;
    std::uint64_t a = mix(s);
    s ^= stream * 0xda942042e4dd58b5ULL;
    std::uint64_t b = mix(s);
    state_ = a ^ (b + 0x632be59bd9b4e019ULL);
}

std::uint64_t RandomStream::next_u64() { return mix(state_); }

double RandomStream::next_uniform() {
    // 53 random bits into (0,1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u = next_uniform();
    double v = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    double angle = 2.0 * M_PI * v;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
}

Complex RandomStream::next_complex_normal() {
    double re = next_normal();
    double im = next_normal();
    return Complex(re, im);
}

Vector haar_random_state(Int size, RandomStream& rng) {
    if (size < 1) throw std::invalid_argument("haar_random_state: size must be >= 1");
    Vector v(size);
    for (Int k = 0; k < size; ++k) v(k) = rng.next_complex_normal();
    double n = v.norm();
    while (n < 1e-12) {  // absurdly unlikely; redraw
        for (Int k = 0; k < size; ++k) v(k) = rng.next_complex_normal();
        n = v.norm();
    }
    return v / n;
}

Vector real_sphere_state(Int size, RandomStream& rng) {
    if (size < 1) throw std::invalid_argument("real_sphere_state: size must be >= 1");
    Vector v(size);
    for (Int k = 0; k < size; ++k) v(k) = Complex(rng.next_normal(), 0.0);
    double n = v.norm();
    while (n < 1e-12) {
        for (Int k = 0; k < size; ++k) v(k) = Complex(rng.next_normal(), 0.0);
        n = v.norm();
    }
    return v / n;
}

}  // namespace sic
