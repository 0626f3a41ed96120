#include "acy/scan.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "acy/errors.hpp"

namespace acy {

uint64_t projective_count(uint64_t q, uint32_t nvars) {
    __uint128_t total = 0, power = 1;
    for (uint32_t i = 0; i < nvars; ++i) {
        total += power;
        power *= q;
        if (total > UINT64_MAX) return UINT64_MAX;
    }
    return uint64_t(total);
}

void enumerate_projective(const Field& F, uint32_t nvars,
                          const std::function<void(const std::vector<Fq>&)>& visit) {
    const uint64_t q = F->order;
    std::vector<Fq> elems;
    elems.reserve(q);
    for (uint64_t i = 0; i < q; ++i) elems.push_back(Fq::decode(F.get(), i));

    std::vector<Fq> point(nvars, Fq::zero(F.get()));
    for (uint32_t chart = 0; chart < nvars; ++chart) {
        std::fill(point.begin(), point.end(), Fq::zero(F.get()));
        point[chart] = Fq::one(F.get());
        const uint32_t free_count = nvars - 1 - chart;
        std::vector<uint64_t> odo(free_count, 0);
        for (;;) {
            for (uint32_t i = 0; i < free_count; ++i) point[chart + 1 + i] = elems[odo[i]];
            visit(point);
            uint32_t i = free_count;
            while (i > 0 && ++odo[i - 1] == q) odo[--i] = 0;
            if (i == 0) break;
        }
    }
}

namespace {

struct WorkUnit {
    uint32_t chart;
    int64_t code;  // value of the first free coordinate, -1 when the chart has one unit
};

struct UnitResult {
    uint64_t scanned = 0;
    std::vector<std::vector<Fq>> candidates;  // all generators vanish
};

Fq horner(const std::vector<Fq>& c, const Fq& x) {
    if (c.empty()) return x - x;  // zero in the right field
    Fq acc = c.back();
    for (size_t i = c.size() - 1; i > 0; --i) acc = acc * x + c[i - 1];
    return acc;
}

// Dense coefficient vector of a univariate-in-last-variable polynomial.
std::vector<Fq> dense_coeffs(const Poly& f, uint32_t var, const FieldSpec* F) {
    int d = f.degree();
    std::vector<Fq> c(size_t(d < 0 ? 0 : d) + 1, Fq::zero(F));
    for (const Term& t : f.terms()) c[t.m.e[var]] += t.c;
    return c;
}

class UnitRunner {
public:
    UnitRunner(const FamilyInstance& inst, const std::vector<Fq>& elems)
        : inst_(inst), elems_(elems), F_(inst.field.get()), n_(inst.nvars),
          hypersurface_(inst.generators.size() == 1) {}

    UnitResult run(const WorkUnit& u) const {
        UnitResult res;
        std::vector<Fq> point(n_, Fq::zero(F_));
        point[u.chart] = Fq::one(F_);
        std::vector<Poly> polys = inst_.generators;
        for (uint32_t v = 0; v < u.chart; ++v)
            for (Poly& f : polys) f = f.substitute_var(v, Fq::zero(F_));
        for (Poly& f : polys) f = f.substitute_var(u.chart, Fq::one(F_));

        uint32_t var = u.chart + 1;
        if (var == n_) {  // single-point chart
            res.scanned = 1;
            bool all_zero = true;
            for (const Poly& f : polys)
                if (!f.evaluate(point).is_zero()) {
                    all_zero = false;
                    break;
                }
            if (all_zero) res.candidates.push_back(point);
            return res;
        }
        if (u.code >= 0) {
            point[var] = elems_[size_t(u.code)];
            for (Poly& f : polys) f = f.substitute_var(var, point[var]);
            ++var;
        }
        recurse(polys, point, var, res);
        return res;
    }

private:
    void recurse(const std::vector<Poly>& polys, std::vector<Fq>& point, uint32_t var,
                 UnitResult& res) const {
        if (var == n_ - 1) {
            leaf(polys, point, res);
            return;
        }
        std::vector<Poly> next(polys.size(), Poly::zero(F_, n_));
        for (const Fq& x : elems_) {
            point[var] = x;
            for (size_t i = 0; i < polys.size(); ++i) next[i] = polys[i].substitute_var(var, x);
            recurse(next, point, var + 1, res);
        }
        point[var] = Fq::zero(F_);
    }

    void leaf(const std::vector<Poly>& polys, std::vector<Fq>& point, UnitResult& res) const {
        const uint32_t var = n_ - 1;
        std::vector<std::vector<Fq>> cs(polys.size());
        for (size_t i = 0; i < polys.size(); ++i) cs[i] = dense_coeffs(polys[i], var, F_);
        std::vector<Fq> dc;
        if (hypersurface_) {
            // derivative in the leaf variable: a singular point of a
            // hypersurface kills every partial, this one included
            dc.assign(cs[0].size() > 1 ? cs[0].size() - 1 : 0, Fq::zero(F_));
            for (size_t e = 1; e < cs[0].size(); ++e) dc[e - 1] = cs[0][e] * Fq(F_, e);
        }
        res.scanned += elems_.size();
        for (const Fq& x : elems_) {
            if (!horner(cs[0], x).is_zero()) continue;
            bool candidate = true;
            if (hypersurface_) {
                candidate = horner(dc, x).is_zero();
            } else {
                for (size_t i = 1; i < cs.size() && candidate; ++i)
                    candidate = horner(cs[i], x).is_zero();
            }
            if (candidate) {
                point[var] = x;
                res.candidates.push_back(point);
            }
        }
        point[var] = Fq::zero(F_);
    }

    const FamilyInstance& inst_;
    const std::vector<Fq>& elems_;
    const FieldSpec* F_;
    uint32_t n_;
    bool hypersurface_;
};

} // namespace

ScanResult find_singular_points(const FamilyInstance& inst, const ScanConfig& cfg) {
    const FieldSpec* F = inst.field.get();
    const uint64_t q = F->order;
    const uint32_t n = inst.nvars;
    uint64_t total = projective_count(q, n);
    if (total > cfg.max_points)
        fail(Err::TooManyPoints, "scan of " + std::to_string(total) +
                                     " points exceeds the cap of " + std::to_string(cfg.max_points));

    std::vector<Fq> elems;
    elems.reserve(q);
    for (uint64_t i = 0; i < q; ++i) elems.push_back(Fq::decode(F, i));

    std::vector<WorkUnit> units;
    for (uint32_t chart = 0; chart < n; ++chart) {
        if (n - 1 - chart >= 2)
            for (uint64_t code = 0; code < q; ++code) units.push_back({chart, int64_t(code)});
        else
            units.push_back({chart, -1});
    }

    UnitRunner runner(inst, elems);
    std::vector<UnitResult> results(units.size());
    const unsigned jobs = std::max(1u, cfg.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < units.size(); ++i) results[i] = runner.run(units[i]);
    } else {
        std::atomic<size_t> next{0};
        auto work = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= units.size()) return;
                results[i] = runner.run(units[i]);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    // Precompute generator partials once for the rank filter.
    std::vector<std::vector<Poly>> partials(inst.generators.size());
    for (size_t i = 0; i < inst.generators.size(); ++i)
        for (uint32_t v = 0; v < n; ++v) partials[i].push_back(inst.generators[i].derivative(v));
    const size_t codim = size_t(n) - 1 - size_t(inst.dim);
    const bool t14 = inst.id == FamilyId::T14_octic || inst.id == FamilyId::T14_fiber;

    ScanResult out;
    for (const UnitResult& ur : results) {
        out.points_scanned += ur.scanned;
        for (const std::vector<Fq>& coords : ur.candidates) {
            FqMat j(F, inst.generators.size(), n);
            for (size_t i = 0; i < partials.size(); ++i)
                for (uint32_t v = 0; v < n; ++v) j.at(i, v) = partials[i][v].evaluate(coords);
            if (rank(j) >= codim) continue;
            SingularPoint sp;
            sp.p = ProjectivePoint::normalized(coords);
            sp.report = node_test(inst, sp.p);
            if (t14) sp.position_class = t14_class_letter(classify_t14(sp.p));
            out.singular.push_back(std::move(sp));
        }
    }
    return out;
}

StabilizeResult stabilize_count(const FamilyInstance& inst, uint32_t k_max, const ScanConfig& cfg) {
    if (inst.field->k != 1) fail(Err::BadArgument, "count stabilization starts from the prime field");
    StabilizeResult out;
    for (uint32_t k = 1; k <= k_max; ++k) {
        Field Fk = k == 1 ? inst.field : make_field(inst.field->p, k);
        FamilyInstance level = k == 1 ? inst : base_change(inst, Fk);
        ScanResult sr = find_singular_points(level, cfg);
        LevelCount lc;
        lc.k = k;
        lc.points_scanned = sr.points_scanned;
        lc.singular_found = sr.singular.size();
        for (SingularPoint& sp : sr.singular) {
            uint32_t minimal = k;
            for (uint32_t j = 1; j < k; ++j) {
                if (k % j != 0) continue;
                bool in_sub = true;
                for (const Fq& c : sp.p.c)
                    if (!element_in_subfield(c, j)) {
                        in_sub = false;
                        break;
                    }
                if (in_sub) {
                    minimal = j;
                    break;
                }
            }
            if (minimal == k) {
                ++lc.new_points;
                out.points.push_back(std::move(sp));
                out.point_level.push_back(k);
            }
        }
        out.cumulative += lc.new_points;
        out.levels.push_back(lc);
    }
    out.stabilized = out.levels.size() >= 2 && out.levels.back().new_points == 0;
    return out;
}

} // namespace acy
