#include "acy/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace acy {

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

Poly Poly::constant(const FieldSpec* F, uint32_t nvars, const Fq& c) {
    Poly p(F, nvars);
    if (!c.is_zero()) p.t_.push_back({Monomial{std::vector<uint8_t>(nvars, 0)}, c});
    return p;
}

Poly Poly::variable(const FieldSpec* F, uint32_t nvars, uint32_t i) {
    std::vector<uint8_t> e(nvars, 0);
    e[i] = 1;
    return monomial(F, nvars, e, Fq::one(F));
}

Poly Poly::monomial(const FieldSpec* F, uint32_t nvars, const std::vector<uint8_t>& exps,
                    const Fq& c) {
    if (exps.size() != nvars) fail(Err::ArityMismatch, "exponent vector length != nvars");
    Poly p(F, nvars);
    if (!c.is_zero()) p.t_.push_back({Monomial{exps}, c});
    return p;
}

int Poly::degree() const {
    if (t_.empty()) return -1;
    return static_cast<int>(t_.front().m.degree());  // leading term has maximal degree
}

bool Poly::is_homogeneous() const {
    if (t_.empty()) return true;
    uint32_t d = t_.front().m.degree();
    return t_.back().m.degree() == d;  // sorted by degree, ends agree -> all agree
}

const Term& Poly::leading_term() const {
    if (t_.empty()) fail(Err::BadArgument, "leading term of zero polynomial");
    return t_.front();
}

Fq Poly::coeff(const Monomial& m) const {
    for (const Term& t : t_)
        if (t.m == m) return t.c;
    return Fq::zero(F_);
}

void Poly::canonicalize() {
    std::sort(t_.begin(), t_.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (Term& t : t_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    t_ = std::move(out);
}

static void check_ring(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars()) fail(Err::ArityMismatch, "polynomial arity mismatch");
    if (a.field() != b.field() && !(a.field() && b.field() && a.field()->same_as(*b.field())))
        fail(Err::FieldMismatch, "polynomial field mismatch");
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Term& t : r.t_) t.c = -t.c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_ring(*this, o);
    Poly r(F_, nvars_);
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = grlex_cmp(t_[i].m, o.t_[j].m);
        if (c > 0) {
            r.t_.push_back(t_[i++]);
        } else if (c < 0) {
            r.t_.push_back(o.t_[j++]);
        } else {
            Fq s = t_[i].c + o.t_[j].c;
            if (!s.is_zero()) r.t_.push_back({t_[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_ring(*this, o);
    Poly r(F_, nvars_);
    if (t_.empty() || o.t_.empty()) return r;
    std::map<Monomial, Fq, GrlexGreater> acc;
    for (const Term& a : t_)
        for (const Term& b : o.t_) {
            Monomial m;
            m.e.resize(nvars_);
            for (uint32_t v = 0; v < nvars_; ++v) {
                unsigned s = unsigned(a.m.e[v]) + unsigned(b.m.e[v]);
                if (s > 255) fail(Err::DegreeOverflow, "exponent exceeds 8-bit slot");
                m.e[v] = static_cast<uint8_t>(s);
            }
            Fq c = a.c * b.c;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), c);
            else
                it->second += c;
        }
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.t_.push_back({m, c});
    return r;  // map iterates in descending grlex already
}

Poly Poly::scaled(const Fq& s) const {
    if (s.is_zero()) return Poly(F_, nvars_);
    Poly r = *this;
    for (Term& t : r.t_) t.c *= s;
    return r;
}

Poly Poly::pow(uint32_t e) const {
    Poly r = Poly::constant(F_, nvars_, Fq::one(F_));
    for (uint32_t i = 0; i < e; ++i) r *= *this;
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (nvars_ != o.nvars_ || t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
}

Fq Poly::evaluate(const std::vector<Fq>& point) const {
    if (point.size() != nvars_) fail(Err::ArityMismatch, "evaluation point arity mismatch");
    // per-variable power tables up to the maximum exponent present
    std::vector<std::vector<Fq>> pw(nvars_);
    for (uint32_t v = 0; v < nvars_; ++v) {
        uint8_t maxe = 0;
        for (const Term& t : t_) maxe = std::max(maxe, t.m.e[v]);
        pw[v].reserve(maxe + 1);
        pw[v].push_back(Fq::one(F_));
        for (uint8_t e = 1; e <= maxe; ++e) pw[v].push_back(pw[v].back() * point[v]);
    }
    Fq acc = Fq::zero(F_);
    for (const Term& t : t_) {
        Fq v = t.c;
        for (uint32_t i = 0; i < nvars_; ++i)
            if (t.m.e[i]) v *= pw[i][t.m.e[i]];
        acc += v;
    }
    return acc;
}

Poly Poly::derivative(uint32_t var) const {
    if (var >= nvars_) fail(Err::ArityMismatch, "derivative variable out of range");
    Poly r(F_, nvars_);
    for (const Term& t : t_) {
        if (t.m.e[var] == 0) continue;
        Fq c = t.c * Fq(F_, t.m.e[var]);
        if (c.is_zero()) continue;  // characteristic-p cancellation
        Term nt{t.m, c};
        nt.m.e[var] -= 1;
        r.t_.push_back(std::move(nt));
    }
    r.canonicalize();
    return r;
}

Poly Poly::substitute_map(const std::vector<Poly>& images) const {
    if (images.size() != nvars_) fail(Err::ArityMismatch, "substitution needs one image per variable");
    const FieldSpec* F = F_;
    uint32_t out_vars = nvars_;
    if (!images.empty()) {
        out_vars = images[0].nvars();
        for (const Poly& im : images) check_ring(images[0], im);
    }
    // lazily extended power tables per variable
    std::vector<std::vector<Poly>> pw(nvars_);
    auto power = [&](uint32_t v, uint8_t e) -> const Poly& {
        auto& tab = pw[v];
        if (tab.empty()) tab.push_back(Poly::constant(F, out_vars, Fq::one(F)));
        while (tab.size() <= e) tab.push_back(tab.back() * images[v]);
        return tab[e];
    };
    Poly acc(F, out_vars);
    for (const Term& t : t_) {
        Poly prod = Poly::constant(F, out_vars, t.c);
        for (uint32_t v = 0; v < nvars_; ++v)
            if (t.m.e[v]) prod *= power(v, t.m.e[v]);
        acc += prod;
    }
    return acc;
}

Poly Poly::substitute_linear(const FqMat& a) const {
    if (a.rows() != nvars_) fail(Err::ShapeMismatch, "substitution matrix needs nvars rows");
    std::vector<Poly> images;
    images.reserve(nvars_);
    for (uint32_t i = 0; i < nvars_; ++i) {
        Poly li(F_, static_cast<uint32_t>(a.cols()));
        for (uint32_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            std::vector<uint8_t> e(a.cols(), 0);
            e[j] = 1;
            li += Poly::monomial(F_, static_cast<uint32_t>(a.cols()), e, a.at(i, j));
        }
        images.push_back(std::move(li));
    }
    return substitute_map(images);
}

Poly Poly::substitute_var(uint32_t var, const Fq& value) const {
    if (var >= nvars_) fail(Err::ArityMismatch, "substitution variable out of range");
    uint8_t maxe = 0;
    for (const Term& t : t_) maxe = std::max(maxe, t.m.e[var]);
    std::vector<Fq> pw{Fq::one(F_)};
    for (uint8_t e = 1; e <= maxe; ++e) pw.push_back(pw.back() * value);
    Poly r(F_, nvars_);
    for (const Term& t : t_) {
        Term nt{t.m, t.c * pw[t.m.e[var]]};
        nt.m.e[var] = 0;
        if (!nt.c.is_zero()) r.t_.push_back(std::move(nt));
    }
    r.canonicalize();
    return r;
}

Poly Poly::exact_divide(const Poly& divisor) const {
    check_ring(*this, divisor);
    if (divisor.is_zero()) fail(Err::DivisionByZero, "division by zero polynomial");
    Poly q(F_, nvars_);
    Poly r = *this;
    const Term& dl = divisor.leading_term();
    Fq dinv = dl.c.inv();
    while (!r.is_zero()) {
        const Term& rl = r.leading_term();
        if (!dl.m.divides(rl.m))
            fail(Err::NotDivisible, "no exact polynomial quotient");
        Term t;
        t.c = rl.c * dinv;
        t.m.e.resize(nvars_);
        for (uint32_t v = 0; v < nvars_; ++v) t.m.e[v] = rl.m.e[v] - dl.m.e[v];
        Poly tp = Poly::monomial(F_, nvars_, t.m.e, t.c);
        q += tp;
        r -= tp * divisor;  // cancels the leading term, grlex strictly drops
    }
    return q;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : t_) {
        if (!first) os << " + ";
        first = false;
        os << t.c.str();
        for (uint32_t v = 0; v < nvars_; ++v) {
            if (!t.m.e[v]) continue;
            os << '*';
            if (v < names.size())
                os << names[v];
            else
                os << 'x' << v;
            if (t.m.e[v] > 1) os << '^' << int(t.m.e[v]);
        }
    }
    return os.str();
}

std::vector<Monomial> monomial_basis(uint32_t nvars, uint32_t degree) {
    std::vector<Monomial> out;
    Monomial cur;
    cur.e.assign(nvars, 0);
    // descending lex within fixed total degree == descending grlex
    auto rec = [&](auto&& self, uint32_t var, uint32_t remaining) -> void {
        if (var + 1 == nvars) {
            if (remaining > 255) fail(Err::DegreeOverflow, "degree exceeds 8-bit slot");
            cur.e[var] = static_cast<uint8_t>(remaining);
            out.push_back(cur);
            return;
        }
        for (int e = static_cast<int>(remaining); e >= 0; --e) {
            cur.e[var] = static_cast<uint8_t>(e);
            self(self, var + 1, remaining - e);
        }
        cur.e[var] = 0;
    };
    if (nvars == 0) return out;
    rec(rec, 0, degree);
    return out;
}

bool is_alternating(const PolyMat& m) {
    if (m.rows != m.cols) return false;
    for (size_t i = 0; i < m.rows; ++i) {
        if (!m.at(i, i).is_zero()) return false;
        for (size_t j = i + 1; j < m.cols; ++j)
            if (m.at(i, j) != -m.at(j, i)) return false;
    }
    return true;
}

namespace {

// Minor expansion over column subsets: minors[mask] = det of the submatrix
// using rows 0..popcount(mask)-1 and the columns in mask.
Poly det_minor(const PolyMat& m, uint32_t mask, std::vector<std::optional<Poly>>& memo,
               const FieldSpec* F, uint32_t nvars) {
    if (mask == 0) return Poly::constant(F, nvars, Fq::one(F));
    auto& slot = memo[mask];
    if (slot) return *slot;
    size_t row = static_cast<size_t>(__builtin_popcount(mask)) - 1;
    Poly acc(F, nvars);
    // Expanding along the last row: the leading cofactor sign is (-1)^row.
    int sign = row % 2 == 0 ? 1 : -1;
    for (uint32_t j = 0; j < m.cols; ++j) {
        if (!(mask & (1u << j))) continue;
        const Poly& entry = m.at(row, j);
        if (!entry.is_zero()) {
            Poly sub = det_minor(m, mask & ~(1u << j), memo, F, nvars);
            if (sign > 0)
                acc += entry * sub;
            else
                acc -= entry * sub;
        }
        sign = -sign;
    }
    slot = acc;
    return acc;
}

Poly pf_expand(const PolyMat& m, uint32_t mask, std::vector<std::optional<Poly>>& memo,
               const FieldSpec* F, uint32_t nvars) {
    if (mask == 0) return Poly::constant(F, nvars, Fq::one(F));
    auto& slot = memo[mask];
    if (slot) return *slot;
    uint32_t i0 = static_cast<uint32_t>(__builtin_ctz(mask));
    uint32_t rest = mask & ~(1u << i0);
    Poly acc(F, nvars);
    int sign = 1;
    for (uint32_t j = i0 + 1; j < m.cols; ++j) {
        if (!(rest & (1u << j))) continue;
        const Poly& entry = m.at(i0, j);
        if (!entry.is_zero()) {
            Poly sub = pf_expand(m, rest & ~(1u << j), memo, F, nvars);
            if (sign > 0)
                acc += entry * sub;
            else
                acc -= entry * sub;
        }
        sign = -sign;
    }
    slot = acc;
    return acc;
}

void check_poly_matrix(const PolyMat& m) {
    if (m.rows == 0 || m.rows != m.cols) fail(Err::ShapeMismatch, "matrix must be square and nonempty");
    if (m.rows > 12) fail(Err::BadArgument, "matrix too large for subset expansion");
}

} // namespace

Poly determinant(const PolyMat& m) {
    check_poly_matrix(m);
    const FieldSpec* F = m.a[0].field();
    uint32_t nvars = m.a[0].nvars();
    std::vector<std::optional<Poly>> memo(1u << m.cols);
    return det_minor(m, (1u << m.cols) - 1, memo, F, nvars);
}

Poly pfaffian(const PolyMat& m) {
    check_poly_matrix(m);
    if (m.rows % 2 != 0) fail(Err::OddSize, "pfaffian needs even size");
    if (!is_alternating(m)) fail(Err::NotAlternating, "pfaffian needs an alternating matrix");
    const FieldSpec* F = m.a[0].field();
    uint32_t nvars = m.a[0].nvars();
    std::vector<std::optional<Poly>> memo(1u << m.cols);
    return pf_expand(m, (1u << m.cols) - 1, memo, F, nvars);
}

std::vector<Poly> principal_pfaffians(const PolyMat& m) {
    check_poly_matrix(m);
    if (m.rows % 2 == 0) fail(Err::EvenSize, "principal pfaffians need odd size");
    if (!is_alternating(m)) fail(Err::NotAlternating, "principal pfaffians need an alternating matrix");
    std::vector<Poly> out;
    out.reserve(m.rows);
    for (size_t drop = 0; drop < m.rows; ++drop) {
        PolyMat sub(m.rows - 1, m.cols - 1, Poly(m.a[0].field(), m.a[0].nvars()));
        for (size_t i = 0, si = 0; i < m.rows; ++i) {
            if (i == drop) continue;
            for (size_t j = 0, sj = 0; j < m.cols; ++j) {
                if (j == drop) continue;
                sub.at(si, sj) = m.at(i, j);
                ++sj;
            }
            ++si;
        }
        out.push_back(pfaffian(sub));
    }
    return out;
}

size_t span_rank(const std::vector<Poly>& polys) {
    if (polys.empty()) return 0;
    const FieldSpec* F = polys[0].field();
    std::map<Monomial, size_t, GrlexGreater> index;
    for (const Poly& f : polys)
        for (const Term& t : f.terms()) index.emplace(t.m, 0);
    size_t col = 0;
    for (auto& kv : index) kv.second = col++;
    FqMat m(F, polys.size(), index.size());
    for (size_t i = 0; i < polys.size(); ++i)
        for (const Term& t : polys[i].terms()) m.at(i, index.at(t.m)) = t.c;
    return rank(m);
}

} // namespace acy
