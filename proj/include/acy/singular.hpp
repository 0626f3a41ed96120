#pragma once

#include <string>
#include <vector>

#include "acy/families.hpp"

namespace acy {

enum class NodeVerdict { Node, NotNode, Unverifiable };
const char* to_string(NodeVerdict v);

struct NodeReport {
    NodeVerdict verdict = NodeVerdict::Unverifiable;
    size_t jacobian_rank = 0;
    size_t tangent_dim = 0;   // kernel of the chart Jacobian
    size_t quadric_rank = 0;  // rank of the certifying quadratic form on the tangent space
    std::string detail;
};

// Degree-2 Taylor data of one polynomial at a chart point: value, gradient
// and quadratic-form matrix (Q_vv the u_v^2 coefficient, Q_vw half the
// u_v u_w coefficient) over the chart coordinates.
struct Taylor2 {
    Fq value;
    std::vector<Fq> grad;
    FqMat quad;
};

// point: values of all ambient variables; chart_vars: the variables treated
// as affine unknowns (the rest stay pinned at their point values).
Taylor2 taylor2_at(const Poly& f, const std::vector<Fq>& point,
                   const std::vector<uint32_t>& chart_vars);

// Rank of the generators' full gradient matrix at a point of the variety.
// Throws PointNotOnVariety when a generator does not vanish at p.
size_t jacobian_rank_at(const FamilyInstance& inst, const ProjectivePoint& p);

// Ordinary-double-point certificate at a point of the variety. Complete
// intersections (generator count equals codimension) get a definite
// Node / NotNode answer; for over-determined generator sets the test scans
// codimension-size generator subsets and can return Unverifiable, never a
// false NotNode. Throws NotSingular when the point is smooth.
NodeReport node_test(const FamilyInstance& inst, const ProjectivePoint& p);

// Affine variant for calibration: generators in n affine variables tested
// at `point`, expecting a variety of dimension expected_dim.
NodeReport node_test_affine(const std::vector<Poly>& gens, const std::vector<Fq>& point,
                            int expected_dim);

// Position classes of the 148 nodes of a type (1,4) octic in z-coordinates:
// C = coordinate vertex, B = on the coordinate tetrahedron but not a vertex,
// A = off the tetrahedron.
enum class T14Class { A, B, C };
char t14_class_letter(T14Class c);
T14Class classify_t14(const ProjectivePoint& p);

} // namespace acy
