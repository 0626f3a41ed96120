#include "acy/singular.hpp"

#include <algorithm>

#include "acy/errors.hpp"

namespace acy {

const char* to_string(NodeVerdict v) {
    switch (v) {
        case NodeVerdict::Node: return "node";
        case NodeVerdict::NotNode: return "not-node";
        case NodeVerdict::Unverifiable: return "unverifiable";
    }
    return "?";
}

Taylor2 taylor2_at(const Poly& f, const std::vector<Fq>& point,
                   const std::vector<uint32_t>& chart_vars) {
    const FieldSpec* F = f.field();
    const size_t m = chart_vars.size();
    // chart slot of each ambient variable, SIZE_MAX when pinned
    std::vector<size_t> slot(f.nvars(), SIZE_MAX);
    for (size_t s = 0; s < m; ++s) slot[chart_vars[s]] = s;

    Taylor2 out{Fq::zero(F), std::vector<Fq>(m, Fq::zero(F)), FqMat(F, m, m)};
    // coefficient of u_a u_b (a <= b) while accumulating one term
    std::vector<Fq> lin(m), quad(m * m);

    for (const Term& term : f.terms()) {
        Fq c0 = term.c;
        std::fill(lin.begin(), lin.end(), Fq::zero(F));
        std::fill(quad.begin(), quad.end(), Fq::zero(F));
        bool dead = false;
        for (uint32_t v = 0; v < f.nvars() && !dead; ++v) {
            uint32_t e = term.m.e[v];
            if (e == 0) continue;
            const Fq pv = point[v];
            if (slot[v] == SIZE_MAX) {
                c0 *= pv.pow(e);
                for (Fq& x : lin) x *= pv.pow(e);
                for (Fq& x : quad) x *= pv.pow(e);
                if (c0.is_zero() && std::all_of(lin.begin(), lin.end(), [](const Fq& x) { return x.is_zero(); }) &&
                    std::all_of(quad.begin(), quad.end(), [](const Fq& x) { return x.is_zero(); }))
                    dead = true;
                continue;
            }
            const size_t a = slot[v];
            // (pv + u_a)^e truncated to degree 2
            Fq t0 = pv.pow(e);
            Fq t1 = Fq(F, e) * (e >= 1 ? pv.pow(e - 1) : Fq::zero(F));
            Fq t2 = e >= 2 ? Fq(F, uint64_t(e) * (e - 1) / 2) * pv.pow(e - 2) : Fq::zero(F);
            // multiply the truncated accumulator by (t0 + t1 u_a + t2 u_a^2)
            std::vector<Fq> nlin(m, Fq::zero(F)), nquad(m * m, Fq::zero(F));
            for (size_t s = 0; s < m; ++s) nlin[s] = lin[s] * t0;
            nlin[a] += c0 * t1;
            for (size_t s = 0; s < m * m; ++s) nquad[s] = quad[s] * t0;
            for (size_t s = 0; s < m; ++s) {
                size_t lo = std::min(s, a), hi = std::max(s, a);
                nquad[lo * m + hi] += lin[s] * t1;
            }
            nquad[a * m + a] += c0 * t2;
            c0 *= t0;
            lin.swap(nlin);
            quad.swap(nquad);
        }
        if (dead) continue;
        out.value += c0;
        for (size_t s = 0; s < m; ++s) out.grad[s] += lin[s];
        const Fq half = Fq(F, 2).inv();
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a; b < m; ++b) {
                const Fq& q = quad[a * m + b];
                if (q.is_zero()) continue;
                if (a == b) {
                    out.quad.at(a, a) += q;
                } else {
                    Fq h = q * half;
                    out.quad.at(a, b) += h;
                    out.quad.at(b, a) += h;
                }
            }
    }
    return out;
}

size_t jacobian_rank_at(const FamilyInstance& inst, const ProjectivePoint& p) {
    const FieldSpec* F = inst.field.get();
    if (p.c.size() != inst.nvars) fail(Err::ArityMismatch, "point dimension mismatch");
    for (const Poly& g : inst.generators)
        if (!g.evaluate(p.c).is_zero())
            fail(Err::PointNotOnVariety, "generator does not vanish at the point");
    FqMat j(F, inst.generators.size(), inst.nvars);
    for (size_t i = 0; i < inst.generators.size(); ++i)
        for (uint32_t v = 0; v < inst.nvars; ++v)
            j.at(i, v) = inst.generators[i].derivative(v).evaluate(p.c);
    return rank(j);
}

namespace {

NodeReport node_core(const std::vector<Taylor2>& data, size_t chart_dim, size_t codim) {
    const FieldSpec* F = data[0].quad.field();
    const size_t g = data.size();
    FqMat j(F, g, chart_dim);
    for (size_t i = 0; i < g; ++i)
        for (size_t s = 0; s < chart_dim; ++s) j.at(i, s) = data[i].grad[s];

    NodeReport rep;
    rep.jacobian_rank = rank(j);
    if (rep.jacobian_rank >= codim) fail(Err::NotSingular, "point is a smooth point");

    std::vector<std::vector<Fq>> tangent = nullspace(j);
    rep.tangent_dim = tangent.size();
    const size_t want = chart_dim - codim + 1;  // expected_dim + 1

    const bool complete_intersection = g == codim;
    if (rep.jacobian_rank + 1 < codim) {
        rep.verdict = complete_intersection ? NodeVerdict::NotNode : NodeVerdict::Unverifiable;
        rep.detail = "corank exceeds 1";
        return rep;
    }

    FqMat t(F, chart_dim, tangent.size());
    for (size_t col = 0; col < tangent.size(); ++col)
        for (size_t s = 0; s < chart_dim; ++s) t.at(s, col) = tangent[col][s];

    auto restricted_rank = [&](const std::vector<size_t>& subset) -> std::optional<size_t> {
        FqMat js(F, subset.size(), chart_dim);
        for (size_t i = 0; i < subset.size(); ++i)
            for (size_t s = 0; s < chart_dim; ++s) js.at(i, s) = data[subset[i]].grad[s];
        if (rank(js) + 1 != codim) return std::nullopt;
        std::vector<std::vector<Fq>> lk = left_nullspace(js);
        if (lk.size() != 1) return std::nullopt;
        FqMat q(F, chart_dim, chart_dim);
        for (size_t i = 0; i < subset.size(); ++i) q = q + data[subset[i]].quad.scaled(lk[0][i]);
        FqMat b = t.transpose() * q * t;
        return rank(b);
    };

    if (complete_intersection) {
        std::vector<size_t> all(g);
        for (size_t i = 0; i < g; ++i) all[i] = i;
        std::optional<size_t> qr = restricted_rank(all);
        if (!qr) {
            // rank(J) == codim-1 held on the full set, so this cannot happen
            rep.verdict = NodeVerdict::Unverifiable;
            rep.detail = "no defining equation";
            return rep;
        }
        rep.quadric_rank = *qr;
        rep.verdict = *qr == want ? NodeVerdict::Node : NodeVerdict::NotNode;
        rep.detail = "complete intersection";
        return rep;
    }

    // Over-determined set: scan codim-size subsets in lexicographic order.
    std::vector<size_t> subset(codim);
    for (size_t i = 0; i < codim; ++i) subset[i] = i;
    size_t tried = 0;
    for (;;) {
        std::optional<size_t> qr = restricted_rank(subset);
        ++tried;
        if (qr && *qr == want) {
            rep.quadric_rank = *qr;
            rep.verdict = NodeVerdict::Node;
            rep.detail = "generator subset " + std::to_string(tried);
            return rep;
        }
        // next combination
        size_t i = codim;
        while (i > 0) {
            --i;
            if (subset[i] != i + g - codim) {
                ++subset[i];
                for (size_t k = i + 1; k < codim; ++k) subset[k] = subset[k - 1] + 1;
                break;
            }
            if (i == 0) {
                rep.verdict = NodeVerdict::Unverifiable;
                rep.detail = "no certifying subset";
                return rep;
            }
        }
    }
}

} // namespace

NodeReport node_test(const FamilyInstance& inst, const ProjectivePoint& p) {
    if (p.c.size() != inst.nvars) fail(Err::ArityMismatch, "point dimension mismatch");
    size_t pivot = 0;
    while (pivot < p.c.size() && p.c[pivot].is_zero()) ++pivot;
    if (pivot == p.c.size()) fail(Err::BadArgument, "zero vector is not a point");

    std::vector<uint32_t> chart;
    for (uint32_t v = 0; v < inst.nvars; ++v)
        if (v != pivot) chart.push_back(v);

    std::vector<Taylor2> data;
    data.reserve(inst.generators.size());
    for (const Poly& g : inst.generators) {
        Taylor2 t2 = taylor2_at(g, p.c, chart);
        if (!t2.value.is_zero()) fail(Err::PointNotOnVariety, "generator does not vanish at the point");
        data.push_back(std::move(t2));
    }
    const size_t chart_dim = inst.nvars - 1;
    const size_t codim = chart_dim - size_t(inst.dim);
    return node_core(data, chart_dim, codim);
}

NodeReport node_test_affine(const std::vector<Poly>& gens, const std::vector<Fq>& point,
                            int expected_dim) {
    if (gens.empty()) fail(Err::BadArgument, "no generators");
    const uint32_t n = gens[0].nvars();
    if (point.size() != n) fail(Err::ArityMismatch, "point dimension mismatch");
    std::vector<uint32_t> chart(n);
    for (uint32_t v = 0; v < n; ++v) chart[v] = v;

    std::vector<Taylor2> data;
    for (const Poly& g : gens) {
        Taylor2 t2 = taylor2_at(g, point, chart);
        if (!t2.value.is_zero()) fail(Err::PointNotOnVariety, "generator does not vanish at the point");
        data.push_back(std::move(t2));
    }
    const size_t codim = size_t(n) - size_t(expected_dim);
    return node_core(data, n, codim);
}

char t14_class_letter(T14Class c) {
    switch (c) {
        case T14Class::A: return 'A';
        case T14Class::B: return 'B';
        case T14Class::C: return 'C';
    }
    return '?';
}

T14Class classify_t14(const ProjectivePoint& p) {
    size_t nonzero = 0;
    for (const Fq& c : p.c)
        if (!c.is_zero()) ++nonzero;
    if (nonzero == 1) return T14Class::C;
    if (nonzero < p.c.size()) return T14Class::B;
    return T14Class::A;
}

} // namespace acy
