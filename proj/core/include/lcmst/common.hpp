#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcmst {

using Weight = std::int64_t;
using Length = std::int64_t;

// Sentinel for "no h-length path"; kept far below INT64_MAX so that a few
// additions cannot wrap.
constexpr Weight kInfWeight = std::numeric_limits<Weight>::max() / 4;

inline bool is_inf(Weight w) { return w >= kInfWeight; }

inline Weight sat_add(Weight a, Weight b) {
    if (is_inf(a) || is_inf(b)) return kInfWeight;
    return a + b;
}

// ── Error taxonomy ──────────────────────────────────────────────────

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("parse error at line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPlanarError : std::runtime_error {
    // Edge ids of a forbidden-minor witness (a K5 or K3,3 subdivision).
    std::vector<int> witness_edges;
    explicit NonPlanarError(std::vector<int> witness)
        : std::runtime_error("graph is not planar"), witness_edges(std::move(witness)) {}
};

struct DisconnectedError : std::runtime_error {
    DisconnectedError() : std::runtime_error("graph is disconnected") {}
};

struct InfiniteDiameterError : std::runtime_error {
    InfiniteDiameterError() : std::runtime_error("h-length-constrained diameter is infinite") {}
};

struct InfeasibleInstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GuessBudgetError : std::runtime_error {
    GuessBudgetError(const std::string& region, std::uint64_t count)
        : std::runtime_error("guess budget exceeded at region " + region + ": " +
                             std::to_string(count) + " guesses") {}
};

struct LayerCapError : std::runtime_error {
    explicit LayerCapError(std::int64_t layers)
        : std::runtime_error("layer cap exceeded: " + std::to_string(layers) + " layers") {}
};

struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define LCMST_CHECK(cond, msg)                                   \
    do {                                                         \
        if (!(cond)) throw ::lcmst::InternalError(std::string("internal check failed: ") + (msg)); \
    } while (0)

// ── Exact rationals for thresholds like h/beta ──────────────────────

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // > 0

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den < 0) { num = -num; den = -den; }
        if (den == 0) throw InternalError("rational with zero denominator");
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// value > r ?
inline bool greater_than(std::int64_t value, const Rational& r) {
    return static_cast<__int128>(value) * r.den > r.num;
}

// ── Deterministic RNG ───────────────────────────────────────────────
//
// mt19937_64 output is fully specified by the standard; distributions are
// not, so we derive bounded draws ourselves for bit-reproducible corpora.

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // splitmix64; deterministic across platforms.
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo >= hi) return lo;
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }
    bool coin(double p = 0.5) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::uint64_t state_;
};

}  // namespace lcmst
