#pragma once

#include "surfcount/exact.hpp"
#include "surfcount/tri.hpp"

#include <array>
#include <string>
#include <vector>

namespace surfcount {

struct normal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Coords { Std7t, Quad3t };

// Index layout: standard coordinates store, per tetrahedron, the four
// triangle types (one per corner) followed by the three quad types (one per
// opposite-edge pair). Quad coordinates store just the three quad types.
inline int std_dim(const Triangulation& t) { return 7 * t.tet_count; }
inline int quad_dim(const Triangulation& t) { return 3 * t.tet_count; }
inline int tri_index(int tet, int corner) { return 7 * tet + corner; }
inline int quad_index_std(int tet, int pair) { return 7 * tet + 4 + pair; }
inline int quad_index_q(int tet, int pair) { return 3 * tet + pair; }

// The quad type whose separation pairs vertices a and b (it is disjoint
// from edge ab and its opposite).
inline int separating_quad(int a, int b) { return edge_pair_of(edge_index_of(std::min(a, b), std::max(a, b))); }

struct NormalVector {
    Coords coords = Coords::Std7t;
    std::vector<Int> v;
    const Triangulation* tri = nullptr;
};

struct MatchingSystem {
    Coords coords = Coords::Std7t;
    IntMat equations;
    std::vector<std::string> row_labels;
    const Triangulation* tri = nullptr;
};

// Standard system: one equation per (glued face class, arc type).
// Quad system: one equation per edge class (ideal triangulations only).
MatchingSystem matching_equations(const Triangulation& tri, Coords coords);

bool satisfies(const MatchingSystem& sys, const std::vector<Int>& v);

// Per-coordinate weight coefficients: sums of reciprocal edge valences over
// the corners of each disk type.
std::vector<Rat> weight_coefficients(const Triangulation& tri);
// chi_i = 1 - s_i/2 + (corner reciprocal-valence sum) for s_i-sided disks.
std::vector<Rat> euler_coefficients_std(const Triangulation& tri);
// chi(e_i) = -1 + (sum of the four angles the quad meets) / 2pi.
std::vector<Rat> euler_coefficients_quad(const Triangulation& tri, const AngleStructure& angles);

Rat weight(const Triangulation& tri, const std::vector<Int>& std_vec);
Rat euler_char_std(const Triangulation& tri, const std::vector<Int>& std_vec);
Rat euler_char_quad(const Triangulation& tri, const AngleStructure& angles, const std::vector<Int>& quad_vec);

bool is_admissible(const Triangulation& tri, Coords coords, const std::vector<Int>& v);

// Entrywise sum of compatible vectors; names the offending tetrahedron
// otherwise.
std::vector<Int> haken_sum(const Triangulation& tri, Coords coords, const std::vector<Int>& a,
                           const std::vector<Int>& b);

struct VertexLinkVector {
    int vertex_class = 0;
    std::vector<Int> vec;  // standard coordinates
    Rat chi;
};
std::vector<VertexLinkVector> vertex_links(const Triangulation& tri);

struct StripResult {
    std::vector<Int> canonical;
    std::vector<Int> link_multiplicities;  // per vertex class
};
StripResult strip_vertex_links(const Triangulation& tri, const std::vector<Int>& std_vec);
bool is_vertex_link(const Triangulation& tri, const std::vector<Int>& std_vec);

// A closed annulus of quads encircling an edge: every incidence around the
// edge carries at least one quad of the type disjoint from it.
bool has_obvious_compression(const Triangulation& tri, const std::vector<Int>& std_vec);

std::vector<Int> quad_part(const Triangulation& tri, const std::vector<Int>& std_vec);

// Standard-coordinate solution with the given quads and no vertex-link
// component (the canonical surface of the quad vector). Requires an
// admissible solution of the quad matching equations.
std::vector<Int> canonical_lift(const Triangulation& tri, const std::vector<Int>& quad_vec);

// Uniform view of a solution system for the cone and counting machinery;
// synthetic systems (tests, models) use the same shape.
struct LinearSystem {
    int dim = 0;
    IntMat equations;                              // may have zero rows
    std::vector<Rat> chi;                          // Euler functional
    std::vector<Rat> weight;                       // empty when unavailable
    std::vector<std::array<int, 3>> quad_groups;   // admissibility groups (may be empty)

    bool admissible(const std::vector<Int>& v) const {
        for (const auto& g : quad_groups) {
            int nz = 0;
            for (int idx : g)
                if (v[idx] != 0) ++nz;
            if (nz > 1) return false;
        }
        return true;
    }
    bool satisfies_equations(const std::vector<Int>& v) const;
    Rat chi_of(const std::vector<Int>& v) const;
};

LinearSystem linear_system_std(const Triangulation& tri);
LinearSystem linear_system_quad(const Triangulation& tri, const AngleStructure& angles);

}  // namespace surfcount
