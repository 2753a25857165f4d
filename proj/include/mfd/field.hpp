#pragma once

// Exact arithmetic in finite fields GF(p^k) realized as F_p[x]/(modulus).
// Elements are coefficient vectors in the power basis of the modulus root.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mfd/errors.hpp"

namespace mfd {

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        const std::int64_t qq = r / new_r;
        const std::int64_t t2 = t - qq * new_t;
        t = new_t;
        new_t = t2;
        const std::int64_t r2 = r - qq * new_r;
        r = new_r;
        new_r = r2;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// Dense polynomial over F_p, coefficients ascending from the constant term.
using Poly = std::vector<std::uint64_t>;

inline void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly poly_add(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = s >= p ? s - p : s;
    }
    poly_trim(r);
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = x >= y ? x - y : x + p - y;
    }
    poly_trim(r);
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    poly_trim(r);
    return r;
}

inline Poly poly_rem(Poly a, const Poly& f, std::uint64_t p) {
    poly_trim(a);
    const int df = poly_deg(f);
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    while (poly_deg(a) >= df) {
        const std::uint64_t c = (a.back() * lead_inv) % p;
        const std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::uint64_t sub = (c * f[i]) % p;
            std::uint64_t& t = a[shift + i];
            t = t >= sub ? t - sub : t + p - sub;
        }
        poly_trim(a);
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    return poly_rem(poly_mul(a, b, p), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r{1};
    base = poly_rem(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint64_t s = inv_mod(a.back(), p);
        for (auto& c : a) c = (c * s) % p;
    }
    return a;
}

// Rabin test. f monic of degree k >= 1 over F_p.
inline bool poly_is_irreducible(const Poly& f, std::uint64_t p) {
    const int k = poly_deg(f);
    if (k < 1) return false;
    // frob[j] = x^(p^j) mod f, built by iterated p-th powers
    std::vector<Poly> frob(static_cast<std::size_t>(k) + 1);
    frob[0] = poly_rem(Poly{0, 1}, f, p);
    for (int j = 1; j <= k; ++j)
        frob[static_cast<std::size_t>(j)] = poly_powmod(frob[static_cast<std::size_t>(j - 1)], p, f, p);
    const Poly x = poly_rem(Poly{0, 1}, f, p);
    if (frob[static_cast<std::size_t>(k)] != x) return false;
    std::vector<int> primes;
    int m = k;
    for (int r = 2; r * r <= m; ++r) {
        if (m % r != 0) continue;
        primes.push_back(r);
        while (m % r == 0) m /= r;
    }
    if (m > 1) primes.push_back(m);
    for (int r : primes) {
        Poly g = poly_gcd(poly_sub(frob[static_cast<std::size_t>(k / r)], x, p), f, p);
        if (poly_deg(g) != 0) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k, coefficients
// compared ascending from the constant term.
inline Poly smallest_irreducible(std::uint64_t p, int k) {
    Poly f(static_cast<std::size_t>(k) + 1, 0);
    f[static_cast<std::size_t>(k)] = 1;
    for (;;) {
        if (poly_is_irreducible(f, p)) return f;
        // odometer on (a_0, ..., a_{k-1}), last position fastest
        int i = k - 1;
        while (i >= 0) {
            if (++f[static_cast<std::size_t>(i)] < p) break;
            f[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) fail(Errc::ReducibleModulus, "no irreducible polynomial found (unreachable)");
    }
}

}  // namespace detail

struct FieldSpec {
    std::uint64_t p = 0;   // prime characteristic
    int k = 0;             // extension degree over F_p
    detail::Poly modulus;  // monic irreducible, degree k, ascending coefficients

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

using Field = std::shared_ptr<const FieldSpec>;

inline Field make_field(std::uint64_t p, int k,
                        std::optional<std::vector<std::uint64_t>> modulus = std::nullopt) {
    if (!detail::is_prime_u64(p)) fail(Errc::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 31)) fail(Errc::UnsupportedFieldSize, "characteristic too large");
    if (k < 1) fail(Errc::DegreeMismatch, "extension degree must be >= 1");
    detail::Poly f;
    if (modulus) {
        f = *modulus;
        for (auto& c : f) c %= p;
        if (detail::poly_deg(f) != k || f.back() != 1)
            fail(Errc::DegreeMismatch, "modulus must be monic of degree " + std::to_string(k));
        if (!detail::poly_is_irreducible(f, p)) fail(Errc::ReducibleModulus, "modulus is reducible over F_p");
    } else {
        f = detail::smallest_irreducible(p, k);
    }
    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->k = k;
    spec->modulus = std::move(f);
    return spec;
}

class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(Field spec, std::vector<std::uint64_t> coeffs) : spec_(std::move(spec)), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != spec_->k) fail(Errc::DegreeMismatch, "coefficient count != field degree");
        for (auto& x : c_) x %= spec_->p;
    }

    static FieldElement zero(const Field& spec) {
        return FieldElement(spec, std::vector<std::uint64_t>(static_cast<std::size_t>(spec->k), 0));
    }
    static FieldElement one(const Field& spec) {
        auto e = zero(spec);
        e.c_[0] = 1;
        return e;
    }
    /// The residue class of an integer inside the prime field.
    static FieldElement from_int(const Field& spec, std::uint64_t v) {
        auto e = zero(spec);
        e.c_[0] = v % spec->p;
        return e;
    }
    /// gamma = the class of x, the root of the modulus.
    static FieldElement generator(const Field& spec) {
        auto e = zero(spec);
        if (spec->k == 1) {
            // x reduces to the constant -modulus[0] in a degree-1 extension
            e.c_[0] = (spec->p - spec->modulus[0] % spec->p) % spec->p;
        } else {
            e.c_[1] = 1;
        }
        return e;
    }

    const Field& spec() const { return spec_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](std::uint64_t v) { return v == 0; });
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return *a.spec_ == *b.spec_ && a.c_ == b.c_;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ',';
            os << c_[i];
        }
        return os.str();
    }

    friend FieldElement add(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        FieldElement r = a;
        const std::uint64_t p = a.spec_->p;
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            std::uint64_t s = r.c_[i] + b.c_[i];
            r.c_[i] = s >= p ? s - p : s;
        }
        return r;
    }

    friend FieldElement sub(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        FieldElement r = a;
        const std::uint64_t p = a.spec_->p;
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = r.c_[i] >= b.c_[i] ? r.c_[i] - b.c_[i] : r.c_[i] + p - b.c_[i];
        return r;
    }

    friend FieldElement mul(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        detail::Poly prod = detail::poly_mulmod(a.c_, b.c_, a.spec_->modulus, a.spec_->p);
        prod.resize(static_cast<std::size_t>(a.spec_->k), 0);
        return FieldElement(a.spec_, std::move(prod));
    }

    friend FieldElement inv(const FieldElement& a) {
        if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
        // extended Euclid in F_p[x]
        const std::uint64_t p = a.spec_->p;
        detail::Poly r0 = a.spec_->modulus, r1 = a.c_;
        detail::poly_trim(r1);
        detail::Poly t0{}, t1{1};
        while (!r1.empty()) {
            // divide r0 by r1
            detail::Poly q;
            detail::Poly rem = r0;
            const std::uint64_t lead_inv = detail::inv_mod(r1.back(), p);
            while (detail::poly_deg(rem) >= detail::poly_deg(r1)) {
                const std::size_t shift = rem.size() - r1.size();
                const std::uint64_t c = (rem.back() * lead_inv) % p;
                if (q.size() < shift + 1) q.resize(shift + 1, 0);
                q[shift] = c;
                for (std::size_t i = 0; i < r1.size(); ++i) {
                    std::uint64_t sb = (c * r1[i]) % p;
                    std::uint64_t& t = rem[shift + i];
                    t = t >= sb ? t - sb : t + p - sb;
                }
                detail::poly_trim(rem);
            }
            detail::Poly t2 = detail::poly_sub(t0, detail::poly_mul(q, t1, p), p);
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 = gcd (a nonzero constant since the modulus is irreducible)
        const std::uint64_t s = detail::inv_mod(r0[0], p);
        for (auto& c : t0) c = (c * s) % p;
        t0.resize(static_cast<std::size_t>(a.spec_->k), 0);
        return FieldElement(a.spec_, std::move(t0));
    }

    friend FieldElement pow(const FieldElement& a, std::uint64_t e) {
        FieldElement r = one(a.spec_);
        FieldElement base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

  private:
    void check_same(const FieldElement& o) const {
        if (!spec_ || !o.spec_ || !(*spec_ == *o.spec_))
            fail(Errc::SpecMismatch, "operands belong to different field specs");
    }

    Field spec_;
    std::vector<std::uint64_t> c_;
};

// ---------------------------------------------------------------------------
// BaseField: the coefficient field F = GF(q), q = p^e, in its canonical
// representation F_p[x]/(g) with g the lexicographically smallest monic
// irreducible of degree e. Elements are packed base-p digit codes
// (digit i = coefficient of x^i), so for e = 1 a code is just the residue.
// Multiplication runs on log/exp tables over a fixed primitive element.
// ---------------------------------------------------------------------------

class BaseField {
  public:
    static std::shared_ptr<const BaseField> make(std::uint64_t p, int e) {
        return std::shared_ptr<const BaseField>(new BaseField(p, e));
    }

    std::uint64_t p() const { return p_; }
    int e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const Field& spec() const { return spec_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (e_ == 1) {
            std::uint32_t s = a + b;
            return s >= q_ ? s - q_ : s;
        }
        std::uint32_t r = 0, m = 1;
        const auto pp = static_cast<std::uint32_t>(p_);
        for (int i = 0; i < e_; ++i) {
            std::uint32_t s = a % pp + b % pp;
            if (s >= pp) s -= pp;
            r += s * m;
            a /= pp;
            b /= pp;
            m *= pp;
        }
        return r;
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (p_ == 2) return a;
        std::uint32_t r = 0, m = 1;
        const auto pp = static_cast<std::uint32_t>(p_);
        for (int i = 0; i < e_; ++i) {
            std::uint32_t d = a % pp;
            r += (d == 0 ? 0 : pp - d) * m;
            a /= pp;
            m *= pp;
        }
        return r;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
        const std::uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1u : 0u;
        const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
        return exp_[l];
    }

    std::uint32_t from_residue(std::uint64_t r) const { return static_cast<std::uint32_t>(r % p_); }

    std::vector<std::uint64_t> code_coeffs(std::uint32_t a) const {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(e_), 0);
        for (int i = 0; i < e_; ++i) {
            c[static_cast<std::size_t>(i)] = a % p_;
            a = static_cast<std::uint32_t>(a / p_);
        }
        return c;
    }

    std::uint32_t coeffs_code(const std::vector<std::uint64_t>& c) const {
        if (static_cast<int>(c.size()) != e_) fail(Errc::DegreeMismatch, "coefficient list length != e");
        std::uint32_t a = 0, m = 1;
        for (int i = 0; i < e_; ++i) {
            a += static_cast<std::uint32_t>(c[static_cast<std::size_t>(i)] % p_) * m;
            m = static_cast<std::uint32_t>(m * p_);
        }
        return a;
    }

    friend bool operator==(const BaseField& a, const BaseField& b) { return a.p_ == b.p_ && a.e_ == b.e_; }

  private:
    BaseField(std::uint64_t p, int e) : p_(p), e_(e) {
        spec_ = make_field(p, e);
        std::uint64_t q = 1;
        for (int i = 0; i < e; ++i) {
            q *= p;
            if (q > (1ull << 20)) fail(Errc::UnsupportedFieldSize, "coefficient field larger than 2^20");
        }
        q_ = static_cast<std::uint32_t>(q);
        build_tables();
    }

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        detail::Poly pa = code_coeffs(a), pb = code_coeffs(b);
        detail::poly_trim(pa);
        detail::poly_trim(pb);
        detail::Poly pr = detail::poly_mulmod(pa, pb, spec_->modulus, p_);
        pr.resize(static_cast<std::size_t>(e_), 0);
        return coeffs_code(pr);
    }

    std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = mul_slow(r, base);
            base = mul_slow(base, base);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        log_.assign(q_, 0);
        if (q_ == 2) {
            exp_ = {1};
            log_[1] = 0;
            return;
        }
        std::vector<std::uint32_t> prime_factors;
        std::uint32_t m = q_ - 1;
        for (std::uint32_t r = 2; r * r <= m; ++r) {
            if (m % r) continue;
            prime_factors.push_back(r);
            while (m % r == 0) m /= r;
        }
        if (m > 1) prime_factors.push_back(m);
        std::uint32_t g = 0;
        for (std::uint32_t cand = 2; cand < q_; ++cand) {
            bool primitive = true;
            for (std::uint32_t r : prime_factors)
                if (pow_slow(cand, (q_ - 1) / r) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                g = cand;
                break;
            }
        }
        exp_.assign(q_ - 1, 0);
        std::uint32_t v = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = v;
            log_[v] = i;
            v = mul_slow(v, g);
        }
    }

    std::uint64_t p_;
    int e_;
    std::uint32_t q_ = 0;
    Field spec_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

using BaseFieldPtr = std::shared_ptr<const BaseField>;

}  // namespace mfd
