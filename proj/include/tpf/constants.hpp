#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tpf {

using BigInt = boost::multiprecision::cpp_int;

// A quantity in the constant chain.  Numeric values are exact or certified
// upper bounds; quantities that depend on the non-constructive functions mu
// and beta stay symbolic and carry a printable expression instead.
struct Value {
    enum class Tag { exact, bound, symbolic };

    Tag tag = Tag::symbolic;
    BigInt number{0};
    std::string expr;

    static Value exact(BigInt n);
    static Value bound(BigInt n);
    static Value symbolic(std::string e);

    bool numeric() const { return tag != Tag::symbolic; }
    std::string tag_name() const;
    // Decimal string for numeric values, the expression otherwise.
    std::string str() const;
};

// binom(n, k); zero when k < 0, k > n, or n < 0.
BigInt binomial(long n, long k);

// Least n such that every red/blue colouring of the edges of K_n contains a
// red K_a or a blue K_b, certified by exhaustive search over all colourings.
// Returns nullopt if certifying would require scanning more than `budget`
// colourings at some order.
std::optional<int> exact_ramsey(int a, int b, long long budget = 1 << 16);

// R(a, b): exact when the exhaustive search can certify it, otherwise the
// binomial upper bound binom(a+b-2, a-1).
Value ramsey(int a, int b);

// Upper bound on the least n such that every tournament on n vertices has a
// transitive subtournament on p vertices, via the bound R_tourn(p) <= R(p,p).
Value tournament_ramsey_bound(int p);

// The derived quantities used by the separator and tree-extraction bounds.
struct ConstantsRecord {
    int t = 0;
    int delta = 0;
    int nu = 0;
    int d = 0;
    int r = 0;

    Value ramsey_t3;  // R(t, 3)
    Value j;          // j(t, delta) = binom(delta, 2) * R(t, 3)
    Value sigma;      // sigma(t, delta) = 2 * delta * (j + t)
    Value s;          // s(t) = sigma(t, 3)
    Value r_tourn;    // bound for R_tourn(nu + 1)
    Value mu;         // mu(max(2s + 1, t)), symbolic
    Value gamma;      // R(R_tourn(nu + 1), mu)
    Value psi;        // psi(t, nu) = R(gamma, t)
    Value m_r;        // m_1 = d; m_r = psi(t, (m_{r-1} + 1) * d) for r > 1
    Value tau;        // tau = beta(max(m_r, t + 1), t)
};

ConstantsRecord constants(int t, int delta, int nu, int d, int r);

}  // namespace tpf
