#include "doctest.h"

#include "surfcount/tri.hpp"

#include <set>

using namespace surfcount;

namespace {
const char* kFig8Sig = "cPcbbbiht";
const char* kPaperT13 = "nvLAAvAPQkcdfgfhkmjlmklmwcadtfaaoaedrg";
const char* kPaperS13 = "nvLALAwAQkedffgiijkmlmlmfvaeetcaangcbn";
}  // namespace

TEST_CASE("perm4 basics") {
    Perm4 p = Perm4::from_string("1032");
    CHECK(p[0] == 1);
    CHECK(p.inverse() == p);
    CHECK(p.sign() == 1);
    CHECK(Perm4::from_string("0132").sign() == -1);
    for (int i = 0; i < 24; ++i) {
        Perm4 q = Perm4::from_lex_index(i);
        CHECK(q.lex_index() == i);
        CHECK((i == 0 || Perm4::from_lex_index(i - 1).to_string() < q.to_string()));
    }
    CHECK(Perm4::from_lex_index(0).is_identity());
}

TEST_CASE("figure-eight signature decodes to the familiar triangulation") {
    Triangulation tri = decode_isosig(kFig8Sig);
    CHECK(tri.tet_count == 2);
    CHECK(tri.kind == TriKind::Ideal);
    CHECK(tri.all_faces_glued());
    CHECK(tri.connected());
    CHECK(tri.oriented);

    REQUIRE(tri.edges.size() == 2);
    CHECK(tri.edges[0].valence == 6);
    CHECK(tri.edges[1].valence == 6);
    CHECK(tri.vertex_count == 1);
    CHECK(tri.face_class_count == 4);

    // Involutivity: reapplying each gluing returns to the source.
    for (int t = 0; t < tri.tet_count; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            REQUIRE(g.glued());
            const auto& back = tri.gluing(g.tet, g.perm[f]);
            CHECK(back.tet == t);
            CHECK(back.perm[g.perm[f]] == f);
            CHECK(back.perm.after(g.perm).is_identity());
        }
}

TEST_CASE("paper 13-tetrahedron signatures") {
    Triangulation t = decode_isosig(kPaperT13);
    CHECK(t.tet_count == 13);
    CHECK(t.kind == TriKind::Ideal);
    CHECK(t.vertex_count == 1);
    int valence_sum = 0;
    for (const auto& e : t.edges) valence_sum += e.valence;
    CHECK(valence_sum == 78);

    Triangulation s = decode_isosig(kPaperS13);
    CHECK(s.tet_count == 13);
    CHECK(s.kind == TriKind::Ideal);
    CHECK(s.vertex_count == 1);
}

TEST_CASE("signature decoding errors") {
    CHECK_THROWS_AS(decode_isosig("cPcbbbih!"), tri_error);
    CHECK_THROWS_AS(decode_isosig("cPcbbbih"), tri_error);  // truncated
    CHECK_THROWS_AS(decode_isosig(""), tri_error);
}

TEST_CASE("framing suffixes are ignored") {
    Triangulation a = decode_isosig(kFig8Sig);
    Triangulation b = decode_isosig(std::string(kFig8Sig) + "_bBaB");
    CHECK(a.tet_count == b.tet_count);
    CHECK(encode_isosig(a) == encode_isosig(b));
}

TEST_CASE("canonical signatures round-trip") {
    for (const char* sig : {kFig8Sig, kPaperT13, kPaperS13}) {
        Triangulation tri = decode_isosig(sig);
        CHECK(encode_isosig(tri) == sig);
    }
}

TEST_CASE("decode after encode is the identity on gluing data") {
    Triangulation tri = decode_isosig(kPaperT13);
    Triangulation back = decode_isosig(encode_isosig(tri));
    CHECK(back.tet_count == tri.tet_count);
    CHECK(encode_isosig(back) == encode_isosig(tri));
}

TEST_CASE("gluing file parser") {
    SUBCASE("figure-eight as a gluing file") {
        Triangulation ref = decode_isosig(kFig8Sig);
        std::string text = "tets 2 kind=ideal\n";
        for (int t = 0; t < 2; ++t) {
            for (int f = 0; f < 4; ++f) {
                const auto& g = ref.gluing(t, f);
                text += std::to_string(g.tet) + ":" + g.perm.to_string() + (f == 3 ? "" : " ");
            }
            text += "\n";
        }
        Triangulation tri = parse_gluing_file(text);
        CHECK(tri.tet_count == 2);
        CHECK(tri.edges.size() == 2);
        CHECK(encode_isosig(tri) == kFig8Sig);
    }
    SUBCASE("count mismatch is an error") {
        CHECK_THROWS_AS(parse_gluing_file("tets 2 kind=finite\n- - - -\n- - - -\n- - - -\n"), tri_error);
    }
    SUBCASE("boundary faces accepted for finite kind") {
        Triangulation tri = parse_gluing_file("# lone tetrahedron\ntets 1 kind=finite\n- - - -\n");
        CHECK(tri.tet_count == 1);
        CHECK(tri.edges.size() == 6);
        for (const auto& e : tri.edges) CHECK(e.valence == 1);
        CHECK(tri.vertex_count == 4);
    }
    SUBCASE("boundary faces rejected for ideal kind") {
        CHECK_THROWS_AS(parse_gluing_file("tets 1 kind=ideal\n- - - -\n"), tri_error);
    }
    SUBCASE("non-involutive gluing is an error") {
        CHECK_THROWS_AS(parse_gluing_file("tets 2 kind=finite\n1:0123 - - -\n- 0:0123 - -\n"), tri_error);
    }
}

TEST_CASE("angle structures") {
    SUBCASE("figure-eight admits the symmetric strict structure") {
        Triangulation tri = decode_isosig(kFig8Sig);
        auto a = find_angle_structure(tri, AngleStrictness::Strict);
        REQUIRE(a.has_value());
        for (const auto& tet : a->angles) {
            Rat sum = tet[0] + tet[1] + tet[2];
            CHECK(sum == 1);
            for (const auto& x : tet) CHECK(x > 0);
        }
        // Verify edge sums exactly.
        for (const auto& e : tri.edges) {
            Rat sum;
            for (const auto& em : e.embeddings) sum += a->angles[em.tet][edge_pair_of(em.edge_index())];
            CHECK(sum == 2);
        }
        // All-valence-6 edges admit the all-pi/3 assignment; check it directly.
        AngleStructure sym;
        sym.angles.assign(tri.tet_count, {Rat(1, 3), Rat(1, 3), Rat(1, 3)});
        for (const auto& e : tri.edges) {
            Rat sum;
            for (const auto& em : e.embeddings) sum += sym.angles[em.tet][edge_pair_of(em.edge_index())];
            CHECK(sum == 2);
        }
    }
    SUBCASE("paper triangulation admits a strict structure") {
        Triangulation tri = decode_isosig(kPaperT13);
        CHECK(find_angle_structure(tri, AngleStrictness::Strict).has_value());
    }
}
