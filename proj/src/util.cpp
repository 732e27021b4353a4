#include "fracsymm/util.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fracsymm {

namespace {

// Newton iteration on Legendre polynomials; standard construction.
GaussRule make_rule(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-16) break;
        }
        p0 = 1.0;
        p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        r.x[n - 1 - i] = 0.5 * (1.0 + t);
        r.w[n - 1 - i] = 0.5 * 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return r;
}

std::mutex g_rule_mutex;
std::map<int, GaussRule>& rule_cache() {
    static std::map<int, GaussRule> c;
    return c;
}

std::atomic<int> g_threads{0};

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1 || n > 256) throw std::invalid_argument("gauss_legendre: order out of range");
    std::lock_guard<std::mutex> lk(g_rule_mutex);
    auto& c = rule_cache();
    auto it = c.find(n);
    if (it == c.end()) it = c.emplace(n, make_rule(n)).first;
    return it->second;
}

std::vector<double> geometric_panels(double len, double scale, int max_panels) {
    std::vector<double> e{0.0};
    if (len <= 0) return e;
    double m = std::min(std::max(scale, len * 0x1.0p-48), len);
    int k = 0;
    while (m < len && k + 2 < max_panels) {
        e.push_back(m);
        m *= 2.0;
        ++k;
    }
    e.push_back(len);
    return e;
}

double Rng::log_uniform(double a, double b) {
    return std::exp(uniform(std::log(a), std::log(b)));
}

void set_thread_count(int n) { g_threads.store(n > 0 ? n : 0); }

int thread_count() {
    int n = g_threads.load();
    if (n > 0) return n;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? int(hc) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    int nt = std::min<std::size_t>(thread_count(), n);
    if (nt <= 1 || n < 2) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::size_t chunk = (n + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace fracsymm
