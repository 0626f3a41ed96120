#include "acy/heisenberg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace acy {

ProjectivePoint ProjectivePoint::normalized(std::vector<Fq> coords) {
    size_t lead = coords.size();
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) {
            lead = i;
            break;
        }
    if (lead == coords.size()) fail(Err::BadArgument, "projective point needs a nonzero coordinate");
    Fq inv = coords[lead].inv();
    for (Fq& v : coords) v *= inv;
    return ProjectivePoint{std::move(coords)};
}

bool ProjectivePoint::operator<(const ProjectivePoint& o) const {
    for (size_t i = 0; i < c.size() && i < o.c.size(); ++i) {
        uint64_t a = c[i].encode(), b = o.c[i].encode();
        if (a != b) return a < b;
    }
    return c.size() < o.c.size();
}

ProjectivePoint apply(const FqMat& g, const ProjectivePoint& p) {
    if (g.cols() != p.c.size()) fail(Err::ShapeMismatch, "group element arity mismatch");
    std::vector<Fq> out(g.rows(), Fq::zero(g.field()));
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < g.cols(); ++j)
            if (!g.at(i, j).is_zero()) out[i] += g.at(i, j) * p.c[j];
    return ProjectivePoint::normalized(std::move(out));
}

HeisenbergGroup make_heisenberg(const Field& F, uint32_t n, ShiftConvention conv, uint32_t power,
                                bool with_iota) {
    if (n < 2) fail(Err::BadArgument, "Heisenberg level must be at least 2");
    if (power == 0 || power >= n) fail(Err::BadArgument, "generator power must be in [1, n)");
    HeisenbergGroup g;
    g.n = n;
    g.F = F.get();
    g.zeta = primitive_root_of_unity(F, n);

    g.sigma = FqMat(F.get(), n, n);
    for (uint32_t j = 0; j < n; ++j) {
        uint32_t i = (conv == ShiftConvention::Down) ? (j + n - 1) % n : (j + 1) % n;
        g.sigma.at(i, j) = Fq::one(F.get());
    }
    g.tau = FqMat(F.get(), n, n);
    for (uint32_t i = 0; i < n; ++i) {
        uint64_t e = (conv == ShiftConvention::Down) ? (n - i % n) % n : i % n;  // zeta^{-i} / zeta^{+i}
        g.tau.at(i, i) = g.zeta.pow(e);
    }
    g.iota = FqMat(F.get(), n, n);
    for (uint32_t i = 0; i < n; ++i) g.iota.at((n - i) % n, i) = Fq::one(F.get());

    FqMat sg = g.sigma, tg = g.tau;
    for (uint32_t i = 1; i < power; ++i) {
        sg = sg * g.sigma;
        tg = tg * g.tau;
    }
    std::string suffix = power == 1 ? "" : "^" + std::to_string(power);
    g.gens.push_back({"sigma" + suffix, sg});
    g.gens.push_back({"tau" + suffix, tg});
    uint64_t d = n / std::gcd(n, power);
    g.scalar_quotient_order = d * d;
    if (with_iota) {
        g.gens.push_back({"iota", g.iota});
        g.scalar_quotient_order *= 2;
    }
    g.label = "H" + std::to_string(n) +
              (power == 1 ? std::string() : "'(" + std::to_string(power) + ")") +
              (with_iota ? "+iota" : "");
    return g;
}

Poly act_on_poly(const FqMat& g, const Poly& f) { return f.substitute_linear(inverse(g)); }

std::vector<ProjectivePoint> orbit(const std::vector<FqMat>& gens, const ProjectivePoint& start,
                                   size_t cap) {
    std::set<ProjectivePoint> seen{start};
    std::vector<ProjectivePoint> frontier{start};
    while (!frontier.empty()) {
        std::vector<ProjectivePoint> next;
        for (const ProjectivePoint& p : frontier)
            for (const FqMat& g : gens) {
                ProjectivePoint q = apply(g, p);
                if (seen.insert(q).second) {
                    if (seen.size() > cap) fail(Err::TooManyPoints, "orbit exceeds cap");
                    next.push_back(std::move(q));
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<Poly> invariant_subspace(const std::vector<FqMat>& gens, const Field& F,
                                     uint32_t nvars, uint32_t degree) {
    std::vector<Monomial> basis = monomial_basis(nvars, degree);
    std::map<Monomial, size_t, GrlexGreater> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    size_t N = basis.size();

    // stacked (T_g - I) over all generators
    FqMat sys(F.get(), N * gens.size(), N);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        FqMat ginv = inverse(gens[gi]);
        for (size_t j = 0; j < N; ++j) {
            Poly img = Poly::monomial(F.get(), nvars, basis[j].e, Fq::one(F.get()))
                           .substitute_linear(ginv);
            for (const Term& t : img.terms()) sys.at(gi * N + index.at(t.m), j) += t.c;
            sys.at(gi * N + j, j) -= Fq::one(F.get());
        }
    }
    std::vector<Poly> out;
    for (const std::vector<Fq>& v : nullspace(sys)) {
        Poly p(F.get(), nvars);
        for (size_t i = 0; i < N; ++i)
            if (!v[i].is_zero()) p += Poly::monomial(F.get(), nvars, basis[i].e, v[i]);
        out.push_back(std::move(p));
    }
    return out;
}

std::optional<FqMat> span_stable(const std::vector<Poly>& gens, const FqMat& g) {
    if (gens.empty()) fail(Err::BadArgument, "span_stable needs generators");
    const FieldSpec* F = gens[0].field();
    FqMat ginv = inverse(g);
    std::vector<Poly> images;
    images.reserve(gens.size());
    for (const Poly& f : gens) images.push_back(f.substitute_linear(ginv));

    std::map<Monomial, size_t, GrlexGreater> index;
    for (const Poly& f : gens)
        for (const Term& t : f.terms()) index.emplace(t.m, 0);
    for (const Poly& f : images)
        for (const Term& t : f.terms()) index.emplace(t.m, 0);
    size_t N = 0;
    for (auto& [m, idx] : index) idx = N++;

    FqMat a(F, N, gens.size());
    for (size_t j = 0; j < gens.size(); ++j)
        for (const Term& t : gens[j].terms()) a.at(index.at(t.m), j) = t.c;

    FqMat trans(F, gens.size(), gens.size());
    for (size_t j = 0; j < images.size(); ++j) {
        std::vector<Fq> b(N, Fq::zero(F));
        for (const Term& t : images[j].terms()) b[index.at(t.m)] = t.c;
        auto x = solve(a, b);
        if (!x) return std::nullopt;
        for (size_t i = 0; i < gens.size(); ++i) trans.at(i, j) = (*x)[i];
    }
    return trans;
}

ProjectivePoint vminus_point(const Field& F, uint32_t n, const std::vector<Fq>& free_coords) {
    uint32_t m = (n % 2 == 1) ? (n - 1) / 2 : n / 2 - 1;
    if (free_coords.size() != m)
        fail(Err::ArityMismatch, "antisymmetric point needs " + std::to_string(m) + " coordinates");
    std::vector<Fq> y(n, Fq::zero(F.get()));
    for (uint32_t i = 1; i <= m; ++i) {
        y[i] = free_coords[i - 1];
        y[n - i] = -free_coords[i - 1];
    }
    bool nonzero = std::any_of(y.begin(), y.end(), [](const Fq& v) { return !v.is_zero(); });
    if (!nonzero) fail(Err::DegenerateParameter, "antisymmetric point is identically zero");
    return ProjectivePoint::normalized(std::move(y));
}

} // namespace acy
