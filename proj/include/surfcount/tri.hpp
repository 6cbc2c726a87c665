#pragma once

#include "surfcount/exact.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace surfcount {

struct tri_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Permutation of {0,1,2,3}, stored by images.
struct Perm4 {
    std::array<uint8_t, 4> img{0, 1, 2, 3};

    Perm4() = default;
    Perm4(int a, int b, int c, int d) : img{uint8_t(a), uint8_t(b), uint8_t(c), uint8_t(d)} {}

    int operator[](int i) const { return img[i]; }
    Perm4 inverse() const {
        Perm4 p;
        for (int i = 0; i < 4; ++i) p.img[img[i]] = uint8_t(i);
        return p;
    }
    // (this o other)(i) = this[other[i]]
    Perm4 after(const Perm4& other) const {
        Perm4 p;
        for (int i = 0; i < 4; ++i) p.img[i] = img[other.img[i]];
        return p;
    }
    int sign() const;
    bool is_identity() const { return img == std::array<uint8_t, 4>{0, 1, 2, 3}; }
    bool operator==(const Perm4& o) const { return img == o.img; }

    // Lexicographic rank of the image tuple; isomorphism signatures store
    // gluing permutations by this index.
    int lex_index() const;
    static Perm4 from_lex_index(int idx);
    static Perm4 from_string(const std::string& digits);  // e.g. "0132"
    std::string to_string() const;
};

struct FaceGluing {
    int tet = -1;  // -1: boundary face
    Perm4 perm;    // vertex map into the target tetrahedron
    bool glued() const { return tet >= 0; }
};

// One appearance of an edge class inside a tetrahedron, with the edge
// oriented tail -> head and the page vertices on either side: the face
// opposite `prev_vertex` is shared with the previous incidence in the
// cyclic walk, the face opposite `next_vertex` with the next.
struct EdgeEmbedding {
    int tet = 0;
    int tail = 0, head = 0;
    int prev_vertex = 0, next_vertex = 0;
    int edge_index() const;  // 0..5 in the fixed edge numbering
};

struct EdgeClass {
    int id = 0;
    int valence = 0;
    bool boundary = false;  // touches an unglued face (finite triangulations)
    std::vector<EdgeEmbedding> embeddings;  // cyclic (or path, when boundary)
};

// Edge numbering: 0:(01) 1:(02) 2:(03) 3:(12) 4:(13) 5:(23).
int edge_index_of(int u, int v);
std::array<int, 2> edge_vertices(int edge_index);
// Opposite-edge pair containing the given edge: 0:{01,23} 1:{02,13} 2:{03,12}.
int edge_pair_of(int edge_index);
// The two edges in a pair.
std::array<int, 2> pair_edges(int pair);

enum class TriKind { Ideal, Finite };

struct Triangulation {
    int tet_count = 0;
    TriKind kind = TriKind::Ideal;
    std::vector<std::array<FaceGluing, 4>> glue;

    // Derived skeleton data, filled by finalize().
    std::vector<EdgeClass> edges;
    std::vector<int> edge_of;            // (tet*6 + edge_index) -> edge class id
    std::vector<int> vertex_of;          // (tet*4 + corner) -> vertex class id
    int vertex_count = 0;
    std::vector<int> face_of;            // (tet*4 + face) -> face class id
    int face_class_count = 0;
    bool oriented = false;               // consistent orientation found
    std::vector<int> tet_orientation;    // +-1 when oriented

    const FaceGluing& gluing(int tet, int face) const { return glue[tet][face]; }
    bool all_faces_glued() const;
    bool connected() const;
    void finalize();  // validates involutivity and derives skeleta
};

// Plain gluing file format; see the README for the grammar.
Triangulation parse_gluing_file(const std::string& text);

// Isomorphism signature codec (3-dimensional, classic encoding). Decoration
// suffixes after '_' (boundary framings) are ignored.
Triangulation decode_isosig(const std::string& signature);
std::string encode_isosig(const Triangulation& tri);

// Autodetects between an isomorphism signature and a gluing-file payload.
Triangulation triangulation_from_text(const std::string& text);
// Reads a file path or treats the string as an isosig.
Triangulation triangulation_from_spec(const std::string& spec);

// Rational angle assignment per (tetrahedron, opposite-edge pair), in units
// of pi. Rows: tet_count x 3.
struct AngleStructure {
    std::vector<std::array<Rat, 3>> angles;
};

enum class AngleStrictness { Strict, PartiallyFlat };

// Exact-LP search for an angle structure: per-tet sums of 1 (i.e. pi) and
// per-edge sums of 2 (i.e. 2 pi), with positivity per strictness.
std::optional<AngleStructure> find_angle_structure(const Triangulation& tri, AngleStrictness strictness);

}  // namespace surfcount
