#include "acy/field.hpp"

#include <algorithm>
#include <sstream>

namespace acy {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense univariate arithmetic over F_p used only for modulus selection.
using UPoly = std::vector<uint64_t>;  // little-endian, no trailing zeros

void utrim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly umod(UPoly a, const UPoly& m, uint64_t p) {
    // m monic
    while (a.size() >= m.size()) {
        uint64_t c = a.back();
        size_t shift = a.size() - m.size();
        if (c != 0)
            for (size_t i = 0; i < m.size(); ++i) {
                uint64_t sub = mulmod(c, m[i], p);
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
        a.pop_back();
        utrim(a);
        if (a.size() < m.size()) break;
    }
    utrim(a);
    return a;
}

UPoly umulmod(const UPoly& a, const UPoly& b, const UPoly& m, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return umod(std::move(r), m, p);
}

UPoly upowmod(UPoly base, uint64_t e, const UPoly& m, uint64_t p) {
    UPoly r{1};
    base = umod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = umulmod(r, base, m, p);
        base = umulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

UPoly ugcd(UPoly a, UPoly b, uint64_t p) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        // reduce a mod b after making b monic
        uint64_t lead = b.back();
        if (lead != 1) {
            uint64_t inv = 1, e = p - 2, acc = lead;
            while (e) {
                if (e & 1) inv = mulmod(inv, acc, p);
                acc = mulmod(acc, acc, p);
                e >>= 1;
            }
            for (auto& c : b) c = mulmod(c, inv, p);
        }
        UPoly r = umod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const UPoly& f, uint64_t p) {
    // f monic of degree k <= 4: irreducible iff it shares no factor with
    // x^(p^i) - x for i = 1..k/2.
    size_t k = f.size() - 1;
    for (size_t i = 1; i <= k / 2; ++i) {
        uint64_t q = 1;
        for (size_t j = 0; j < i; ++j) q *= p;
        UPoly xq = upowmod(UPoly{0, 1}, q, f, p);
        // xq - x
        if (xq.size() < 2) xq.resize(2, 0);
        xq[1] = (xq[1] + p - 1) % p;
        utrim(xq);
        UPoly g = ugcd(f, xq, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

Field make_field(uint64_t p, uint32_t k) {
    if (p == 2) fail(Err::CharTwoUnsupported, "characteristic 2 is not supported");
    if (p > 1000000) fail(Err::BadArgument, "prime too large: " + std::to_string(p));
    if (!is_prime(p)) fail(Err::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1 || k > 4) fail(Err::BadExtensionDegree, "extension degree must be in [1,4]");

    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->k = k;
    spec->order = 1;
    for (uint32_t i = 0; i < k; ++i) spec->order *= p;

    if (k >= 2) {
        uint64_t pk = spec->order;
        bool found = false;
        for (uint64_t code = 0; code < pk; ++code) {
            UPoly f(k + 1, 0);
            uint64_t c = code;
            for (uint32_t i = 0; i < k; ++i) {
                f[i] = c % p;
                c /= p;
            }
            f[k] = 1;
            if (is_irreducible(f, p)) {
                for (uint32_t i = 0; i <= k; ++i) spec->modulus[i] = f[i];
                found = true;
                break;
            }
        }
        if (!found) fail(Err::BadArgument, "no irreducible modulus found");  // cannot happen for prime p
    }
    return spec;
}

Fq::Fq(const FieldSpec* F, uint64_t value) : F_(F) { c_[0] = value % F->p; }

Fq::Fq(const FieldSpec* F, const std::vector<uint64_t>& coeffs) : F_(F) {
    if (coeffs.size() > F->k) fail(Err::BadArgument, "too many coefficients for field element");
    for (size_t i = 0; i < coeffs.size(); ++i) c_[i] = coeffs[i] % F->p;
}

bool Fq::is_zero() const {
    for (uint32_t i = 0; i < F_->k; ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Fq::is_one() const {
    if (c_[0] != 1) return false;
    for (uint32_t i = 1; i < F_->k; ++i)
        if (c_[i] != 0) return false;
    return true;
}

uint64_t Fq::encode() const {
    uint64_t code = 0;
    for (uint32_t i = F_->k; i-- > 0;) code = code * F_->p + c_[i];
    return code;
}

Fq Fq::decode(const FieldSpec* F, uint64_t code) {
    Fq r;
    r.F_ = F;
    for (uint32_t i = 0; i < F->k; ++i) {
        r.c_[i] = code % F->p;
        code /= F->p;
    }
    return r;
}

void Fq::check_same_field(const Fq& o) const {
    if (F_ == o.F_) return;
    if (F_ == nullptr || o.F_ == nullptr || !F_->same_as(*o.F_))
        fail(Err::FieldMismatch, "operands belong to different fields");
}

Fq Fq::operator-() const {
    Fq r = *this;
    for (uint32_t i = 0; i < F_->k; ++i) r.c_[i] = (F_->p - c_[i]) % F_->p;
    return r;
}

Fq Fq::operator+(const Fq& o) const {
    check_same_field(o);
    Fq r = *this;
    for (uint32_t i = 0; i < F_->k; ++i) {
        r.c_[i] += o.c_[i];
        if (r.c_[i] >= F_->p) r.c_[i] -= F_->p;
    }
    return r;
}

Fq Fq::operator-(const Fq& o) const {
    check_same_field(o);
    Fq r = *this;
    for (uint32_t i = 0; i < F_->k; ++i) r.c_[i] = (r.c_[i] + F_->p - o.c_[i]) % F_->p;
    return r;
}

Fq Fq::operator*(const Fq& o) const {
    check_same_field(o);
    const uint64_t p = F_->p;
    const uint32_t k = F_->k;
    Fq r;
    r.F_ = F_;
    if (k == 1) {
        r.c_[0] = mulmod(c_[0], o.c_[0], p);
        return r;
    }
    std::array<uint64_t, 7> t{};
    for (uint32_t i = 0; i < k; ++i) {
        if (c_[i] == 0) continue;
        for (uint32_t j = 0; j < k; ++j) t[i + j] = (t[i + j] + mulmod(c_[i], o.c_[j], p)) % p;
    }
    // reduce by the monic modulus
    for (uint32_t d = 2 * k - 2; d >= k; --d) {
        uint64_t c = t[d];
        if (c == 0) continue;
        t[d] = 0;
        for (uint32_t j = 0; j < k; ++j) {
            uint64_t sub = mulmod(c, F_->modulus[j], p);
            t[d - k + j] = (t[d - k + j] + p - sub) % p;
        }
    }
    for (uint32_t i = 0; i < k; ++i) r.c_[i] = t[i];
    return r;
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inv(); }

bool Fq::operator==(const Fq& o) const {
    check_same_field(o);
    for (uint32_t i = 0; i < F_->k; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Fq Fq::inv() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
    return pow(F_->order - 2);  // Lagrange: a^(q-1) = 1 for a != 0
}

Fq Fq::pow(uint64_t e) const {
    Fq base = *this;
    Fq r = Fq::one(F_);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string Fq::str() const {
    if (F_->k == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    os << '[';
    for (uint32_t i = 0; i < F_->k; ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ']';
    return os.str();
}

uint64_t element_order(const Fq& a) {
    if (a.is_zero()) fail(Err::BadArgument, "order of zero");
    uint64_t n = a.spec()->order - 1;
    uint64_t ord = n;
    // strip every prime factor of n that keeps a^(ord/l) = 1
    uint64_t m = n;
    for (uint64_t l = 2; l * l <= m; ++l) {
        if (m % l) continue;
        while (m % l == 0) m /= l;
        while (ord % l == 0 && a.pow(ord / l).is_one()) ord /= l;
    }
    if (m > 1)
        while (ord % m == 0 && a.pow(ord / m).is_one()) ord /= m;
    return ord;
}

Fq primitive_root_of_unity(const Field& F, uint64_t n) {
    if (n == 0) fail(Err::BadArgument, "root order must be positive");
    uint64_t q1 = F->order - 1;
    if (q1 % n != 0)
        fail(Err::NoSuchRoot, "no primitive root: " + std::to_string(n) + " does not divide " +
                                  std::to_string(q1));
    if (n == 1) return Fq::one(F.get());
    for (uint64_t code = 1; code < F->order; ++code) {
        Fq g = Fq::decode(F.get(), code).pow(q1 / n);
        if (!g.is_one() && element_order(g) == n) return g;
    }
    fail(Err::NoSuchRoot, "exhausted field without primitive root");  // unreachable for valid n
}

Fq embed(const Fq& a, const Field& target) {
    const FieldSpec* src = a.spec();
    if (src->same_as(*target)) {
        std::vector<uint64_t> cs(src->k);
        for (uint32_t i = 0; i < src->k; ++i) cs[i] = a.coeff(i);
        return Fq(target.get(), cs);
    }
    if (src->p != target->p || src->k != 1)
        fail(Err::FieldMismatch, "embedding supported only from the prime field");
    return Fq(target.get(), a.coeff(0));
}

bool element_in_subfield(const Fq& a, uint32_t j) {
    uint64_t pj = 1;
    for (uint32_t i = 0; i < j; ++i) pj *= a.spec()->p;
    return a.pow(pj) == a;
}

} // namespace acy
