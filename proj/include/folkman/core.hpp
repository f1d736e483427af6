// Bit-mask vertex sets, exact rationals and the error/budget vocabulary
// shared by every solver in the library.
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace folkman {

using Mask = std::uint32_t;

// Hard representation limit: one adjacency row per machine word.
inline constexpr int kMaxVertices = 32;

// ---------------------------------------------------------------- errors --

struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct SizeCapExceeded : std::runtime_error {
    SizeCapExceeded(const std::string& what, int requested, int cap)
        : std::runtime_error(what + " (requested " + std::to_string(requested) +
                             ", cap " + std::to_string(cap) + ")"),
          requested(requested), cap(cap) {}
    int requested;
    int cap;
};

// Thrown when a solver runs out of nodes or wall time. Carries the best
// bracketing bounds known at the point of interruption so sweeps can
// distinguish "checked" from "skipped".
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& what, long long lower, long long upper)
        : std::runtime_error(what), lower_bound(lower), upper_bound(upper) {}
    long long lower_bound;
    long long upper_bound;
};

// ------------------------------------------------------------- VertexSet --

// Subset of {0,..,n-1} as a bit mask. The universe size is implicit; all
// operations are plain word arithmetic.
struct VertexSet {
    Mask bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask m) : bits(m) {}

    static constexpr VertexSet single(int v) { return VertexSet(Mask{1} << v); }
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= kMaxVertices ? ~Mask{0} : (Mask{1} << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.bits |= Mask{1} << v;
        return s;
    }
    static VertexSet of_vertices(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.bits |= Mask{1} << v;
        return s;
    }

    constexpr bool empty() const { return bits == 0; }
    int count() const { return std::popcount(bits); }
    constexpr bool contains(int v) const { return (bits >> v) & 1u; }
    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

    // Lowest-index member; undefined on the empty set.
    int lowest() const { return std::countr_zero(bits); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }
    VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }
    VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }

    VertexSet& add(int v) { bits |= Mask{1} << v; return *this; }
    VertexSet& remove(int v) { bits &= ~(Mask{1} << v); return *this; }

    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }

    // for (int v : set) iterates members in ascending order.
    struct iterator {
        Mask rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v : *this) out.push_back(v);
        return out;
    }
};

// -------------------------------------------------------------- Rational --

// Exact reduced fraction on int64. Magnitudes here are tiny (vertex counts
// and small multiples), but comparisons go through 128-bit cross products
// anyway so they can never silently wrap.
struct Rational {
    long long num = 0;
    long long den = 1;

    constexpr Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    Rational inverse() const {
        if (num == 0) throw std::domain_error("Rational: inverse of zero");
        return Rational(den, num);
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }

    friend bool operator==(Rational a, Rational b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(Rational a, Rational b) { return !(a == b); }
    friend bool operator<(Rational a, Rational b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(Rational a, Rational b) { return !(b < a); }
    friend bool operator>(Rational a, Rational b) { return b < a; }
    friend bool operator>=(Rational a, Rational b) { return !(a < b); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// ---------------------------------------------------------------- budget --

// Node and wall-time limits for the NP-hard kernels; absent means unbounded.
struct SolverBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::uint64_t> max_millis;

    bool unbounded() const { return !max_nodes && !max_millis; }
};

}  // namespace folkman
