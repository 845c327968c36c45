#include "tpf/constants.hpp"

#include <stdexcept>
#include <vector>

namespace tpf {

Value Value::exact(BigInt n) {
    Value v;
    v.tag = Tag::exact;
    v.number = std::move(n);
    return v;
}

Value Value::bound(BigInt n) {
    Value v;
    v.tag = Tag::bound;
    v.number = std::move(n);
    return v;
}

Value Value::symbolic(std::string e) {
    Value v;
    v.tag = Tag::symbolic;
    v.expr = std::move(e);
    return v;
}

std::string Value::tag_name() const {
    switch (tag) {
        case Tag::exact: return "exact";
        case Tag::bound: return "bound";
        default: return "symbolic";
    }
}

std::string Value::str() const {
    return tag == Tag::symbolic ? expr : number.str();
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::optional<int> exact_ramsey(int a, int b, long long budget) {
    if (a < 0 || b < 0) return std::nullopt;
    if (a == 0 || b == 0) return 0;
    for (int n = 0;; ++n) {
        long long m = (long long)n * (n - 1) / 2;
        if (m > 62 || (1LL << m) > budget) return std::nullopt;

        // For every candidate vertex set of size a (resp. b), the mask of
        // edge positions inside it.  A colouring (red = set bit) contains a
        // red K_a iff it covers some size-a mask, and a blue K_b iff it is
        // disjoint from some size-b mask.
        std::vector<unsigned long long> red_masks, blue_masks;
        for (int sub = 0; sub < (1 << n); ++sub) {
            int size = __builtin_popcount((unsigned)sub);
            if (size != a && size != b) continue;
            unsigned long long pm = 0;
            int k = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++k)
                    if ((sub >> i & 1) && (sub >> j & 1)) pm |= 1ULL << k;
            if (size == a) red_masks.push_back(pm);
            if (size == b) blue_masks.push_back(pm);
        }

        bool forced = true;
        for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
            bool mono = false;
            for (unsigned long long pm : red_masks)
                if ((mask & pm) == pm) {
                    mono = true;
                    break;
                }
            if (!mono)
                for (unsigned long long pm : blue_masks)
                    if ((mask & pm) == 0) {
                        mono = true;
                        break;
                    }
            if (!mono) {
                forced = false;
                break;
            }
        }
        if (forced) return n;
    }
}

Value ramsey(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("ramsey: negative argument");
    if (auto n = exact_ramsey(a, b)) return Value::exact(*n);
    return Value::bound(binomial(a + b - 2, a - 1));
}

Value tournament_ramsey_bound(int p) {
    return Value::bound(ramsey(p, p).number);
}

ConstantsRecord constants(int t, int delta, int nu, int d, int r) {
    ConstantsRecord rec;
    rec.t = t;
    rec.delta = delta;
    rec.nu = nu;
    rec.d = d;
    rec.r = r;

    rec.ramsey_t3 = ramsey(t, 3);
    bool exact_chain = rec.ramsey_t3.tag == Value::Tag::exact;
    auto carry = [&](BigInt n) {
        return exact_chain ? Value::exact(std::move(n)) : Value::bound(std::move(n));
    };

    BigInt jn = binomial(delta, 2) * rec.ramsey_t3.number;
    rec.j = carry(jn);
    rec.sigma = carry(2 * delta * (jn + t));

    BigInt j3 = binomial(3, 2) * rec.ramsey_t3.number;
    BigInt sn = 2 * 3 * (j3 + t);
    rec.s = carry(sn);

    rec.r_tourn = tournament_ramsey_bound(nu + 1);

    BigInt mu_arg = 2 * sn + 1;
    if (BigInt(t) > mu_arg) mu_arg = t;
    rec.mu = Value::symbolic("mu(" + mu_arg.str() + ")");
    rec.gamma = Value::symbolic("R(R_tourn(" + std::to_string(nu + 1) + "), " +
                                rec.mu.expr + ")");
    rec.psi = Value::symbolic("R(" + rec.gamma.expr + ", " + std::to_string(t) + ")");

    Value m = Value::exact(BigInt(d));
    for (int i = 2; i <= r; ++i) {
        if (m.numeric()) {
            BigInt arg = (m.number + 1) * d;
            m = Value::symbolic("psi(" + std::to_string(t) + ", " + arg.str() + ")");
        } else {
            m = Value::symbolic("psi(" + std::to_string(t) + ", (" + m.expr + "+1)*" +
                                std::to_string(d) + ")");
        }
    }
    rec.m_r = m;

    if (m.numeric()) {
        BigInt arg = m.number;
        if (BigInt(t + 1) > arg) arg = t + 1;
        rec.tau = Value::symbolic("beta(" + arg.str() + ", " + std::to_string(t) + ")");
    } else {
        rec.tau = Value::symbolic("beta(max(" + m.expr + ", " + std::to_string(t + 1) +
                                  "), " + std::to_string(t) + ")");
    }
    return rec;
}

}  // namespace tpf
