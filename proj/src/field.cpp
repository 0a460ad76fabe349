#include "spreadcode/field.hpp"

#include <sstream>
#include <stdexcept>

namespace spreadcode {

namespace {

constexpr int kMaxOrder = 1 << 16;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int d = 2; (long long)d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Multiplication of element codes straight from the digit representation,
// reducing by the modulus. Used only while the log/antilog tables are built.
felem raw_mul(int p, int e, const std::vector<int>& modulus, felem a, felem b) {
    std::vector<int> da(e), db(e);
    int x = a, y = b;
    for (int i = 0; i < e; ++i) { da[i] = x % p; x /= p; }
    for (int i = 0; i < e; ++i) { db[i] = y % p; y /= p; }

    std::vector<int> prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < e; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    // x^e = -(modulus minus leading term), applied top down
    for (int d = 2 * e - 2; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i) {
            int t = (prod[d - e + i] - c * modulus[i]) % p;
            prod[d - e + i] = (t + p) % p;
        }
    }
    int code = 0, mult = 1;
    for (int i = 0; i < e; ++i) { code += prod[i] * mult; mult *= p; }
    return (felem)code;
}

felem raw_pow(int p, int e, const std::vector<int>& modulus, felem a, long long n) {
    felem r = 1, base = a;
    while (n > 0) {
        if (n & 1) r = raw_mul(p, e, modulus, r, base);
        base = raw_mul(p, e, modulus, base, base);
        n >>= 1;
    }
    return r;
}

}  // namespace

std::shared_ptr<const Field> Field::make(int p, int e) {
    if (!is_prime(p)) {
        std::ostringstream os;
        os << "field characteristic must be prime, got " << p;
        throw std::invalid_argument(os.str());
    }
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
    }

    std::vector<int> modulus;
    if (e == 1) {
        modulus = {0, 1};  // x
    } else {
        auto fp = Field::make(p, 1);
        Poly f = find_irreducible(*fp, e);
        modulus.assign(f.begin(), f.end());
    }

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->e_ = e;
    field->q_ = (int)q;
    field->modulus_ = std::move(modulus);
    field->build_tables();
    return field;
}

std::shared_ptr<const Field> Field::with_modulus(int p, int e,
                                                 const std::vector<int>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
    }
    if ((int)modulus.size() != e + 1 || modulus[e] != 1)
        throw std::invalid_argument("modulus must be monic of degree e");
    for (int c : modulus)
        if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (e == 1) {
        if (modulus[0] != 0)
            throw std::invalid_argument("prime-field modulus must be x");
    } else {
        auto fp = Field::make(p, 1);
        Poly f(modulus.begin(), modulus.end());
        if (!is_irreducible(*fp, f))
            throw std::invalid_argument("modulus is reducible");
    }

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->e_ = e;
    field->q_ = (int)q;
    field->modulus_ = modulus;
    field->build_tables();
    return field;
}

void Field::build_tables() {
    const int q = q_;
    // Smallest element code generating the multiplicative group.
    if (q == 2) {
        generator_ = 1;
    } else {
        auto factors = prime_factors(q - 1);
        for (int cand = 2; cand < q; ++cand) {
            bool ok = true;
            for (int r : factors) {
                if (raw_pow(p_, e_, modulus_, (felem)cand, (q - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) { generator_ = (felem)cand; break; }
        }
        if (generator_ == 0) throw std::logic_error("no generator found");
    }

    exp_.assign(q - 1, 0);
    log_.assign(q, 0);
    std::vector<bool> seen(q, false);
    felem cur = 1;
    for (int i = 0; i < q - 1; ++i) {
        exp_[i] = cur;
        if (seen[cur]) throw std::logic_error("generator order too small");
        seen[cur] = true;
        log_[cur] = (felem)i;
        cur = raw_mul(p_, e_, modulus_, cur, generator_);
    }
    if (cur != 1) throw std::logic_error("generator order mismatch");
}

felem Field::add(felem a, felem b) const {
    if (p_ == 2) return a ^ b;
    int res = 0, mult = 1, x = a, y = b;
    for (int i = 0; i < e_; ++i) {
        res += ((x % p_ + y % p_) % p_) * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return (felem)res;
}

felem Field::neg(felem a) const {
    if (p_ == 2) return a;
    int res = 0, mult = 1, x = a;
    for (int i = 0; i < e_; ++i) {
        res += ((p_ - x % p_) % p_) * mult;
        x /= p_;
        mult *= p_;
    }
    return (felem)res;
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Field::mul(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    int idx = log_[a] + log_[b];
    if (idx >= q_ - 1) idx -= q_ - 1;
    return exp_[idx];
}

felem Field::inv(felem a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

felem Field::pow(felem a, long long n) const {
    if (n < 0) throw std::invalid_argument("negative exponent");
    if (a == 0) return n == 0 ? (felem)1 : (felem)0;
    long long idx = ((long long)log_[a] * (n % (q_ - 1))) % (q_ - 1);
    return exp_[idx];
}

std::vector<int> Field::digits(felem a) const {
    std::vector<int> d(e_);
    int x = a;
    for (int i = 0; i < e_; ++i) { d[i] = x % p_; x /= p_; }
    return d;
}

felem Field::from_digits(const std::vector<int>& d) const {
    if ((int)d.size() != e_) throw std::invalid_argument("digit count mismatch");
    int code = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        if (d[i] < 0 || d[i] >= p_) throw std::invalid_argument("digit out of range");
        code += d[i] * mult;
        mult *= p_;
    }
    return (felem)code;
}

std::vector<felem> Field::elements() const {
    std::vector<felem> out(q_);
    for (int i = 0; i < q_; ++i) out[i] = (felem)i;
    return out;
}

bool Field::same(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
}

// ---- polynomials over GF(q) ------------------------------------------------

int poly_degree(const Poly& f) {
    for (int i = (int)f.size() - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

bool poly_is_zero(const Poly& f) { return poly_degree(f) < 0; }

bool poly_is_monic(const Field&, const Poly& f) {
    int d = poly_degree(f);
    return d >= 0 && f[d] == 1;
}

Poly poly_trim(Poly f) {
    f.resize(poly_degree(f) + 1);
    return f;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        felem x = i < a.size() ? a[i] : (felem)0;
        felem y = i < b.size() ? b[i] : (felem)0;
        out[i] = F.add(x, y);
    }
    return poly_trim(out);
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    int da = poly_degree(a), db = poly_degree(b);
    if (da < 0 || db < 0) return {};
    Poly out(da + db + 1, 0);
    for (int i = 0; i <= da; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= db; ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return out;
}

Poly poly_mod(const Field& F, Poly a, const Poly& b) {
    int db = poly_degree(b);
    if (db < 0) throw std::invalid_argument("division by zero polynomial");
    felem lead_inv = F.inv(b[db]);
    int da = poly_degree(a);
    while (da >= db) {
        felem factor = F.mul(a[da], lead_inv);
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = F.sub(a[da - db + i], F.mul(factor, b[i]));
        da = poly_degree(a);
    }
    return poly_trim(a);
}

bool is_irreducible(const Field& F, const Poly& f) {
    Poly g = poly_trim(f);
    int deg = poly_degree(g);
    if (deg < 1) throw std::invalid_argument("degree must be >= 1");
    if (g[deg] != 1) throw std::invalid_argument("polynomial must be monic");

    const int q = F.q();
    for (int d = 1; 2 * d <= deg; ++d) {
        unsigned long long count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (unsigned long long idx = 0; idx < count; ++idx) {
            Poly div(d + 1, 0);
            unsigned long long t = idx;
            for (int i = 0; i < d; ++i) { div[i] = (felem)(t % q); t /= q; }
            div[d] = 1;
            if (poly_is_zero(poly_mod(F, g, div))) return false;
        }
    }
    return true;
}

Poly find_irreducible(const Field& F, int k) {
    if (k < 1) throw std::invalid_argument("degree must be >= 1");
    const int q = F.q();
    unsigned long long count = 1;
    for (int i = 0; i < k; ++i) count *= q;
    for (unsigned long long idx = 0; idx < count; ++idx) {
        Poly f(k + 1, 0);
        unsigned long long t = idx;
        for (int i = 0; i < k; ++i) { f[i] = (felem)(t % q); t /= q; }
        f[k] = 1;
        if (is_irreducible(F, f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace spreadcode
