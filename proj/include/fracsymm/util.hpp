#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace fracsymm {

// Gauss-Legendre nodes/weights on [0,1]. Cached per order, thread-safe after
// first use of a given order (orders used are initialized eagerly below).
struct GaussRule {
    std::vector<double> x, w;
};

const GaussRule& gauss_legendre(int n);

// Evaluates sum_k w_k f(a + (b-a) x_k) * (b-a).
template <class F>
double gl_integrate(const F& f, double a, double b, int n) {
    const GaussRule& g = gauss_legendre(n);
    double s = 0.0;
    for (std::size_t k = 0; k < g.x.size(); ++k)
        s += g.w[k] * f(a + (b - a) * g.x[k]);
    return s * (b - a);
}

// Geometric panel boundaries {0, m, 2m, 4m, ..., len} used to resolve
// power-law integrands toward 0. Returns increasing edges starting at 0.
std::vector<double> geometric_panels(double len, double scale, int max_panels = 64);

// Deterministic 64-bit RNG (splitmix64). Self-contained so frozen test
// values do not depend on the standard library's distributions.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0,1)
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    // log-uniform on [a,b], a,b > 0
    double log_uniform(double a, double b);
    int uniform_int(int n) { return int(next_u64() % std::uint64_t(n)); }
};

// Static-chunk parallel loop with deterministic work partition. Results must
// be written to disjoint slots by the body; numeric output is then identical
// for every thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

// Global thread budget (CLI --threads); defaults to hardware concurrency.
void set_thread_count(int n);
int thread_count();

}  // namespace fracsymm
