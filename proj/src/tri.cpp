#include "surfcount/tri.hpp"
#include "surfcount/lp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace surfcount {

int Perm4::sign() const {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (img[i] > img[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

namespace {

std::array<Perm4, 24> build_lex_table() {
    std::array<Perm4, 24> lex;
    std::array<int, 4> v{0, 1, 2, 3};
    int n = 0;
    do {
        lex[n++] = Perm4(v[0], v[1], v[2], v[3]);
    } while (std::next_permutation(v.begin(), v.end()));
    return lex;
}

const std::array<Perm4, 24>& lex_table() {
    static const std::array<Perm4, 24> table = build_lex_table();
    return table;
}

}  // namespace

int Perm4::lex_index() const {
    const auto& t = lex_table();
    for (int i = 0; i < 24; ++i)
        if (t[i] == *this) return i;
    throw tri_error("Perm4: corrupt permutation");
}

Perm4 Perm4::from_lex_index(int idx) {
    if (idx < 0 || idx >= 24) throw tri_error("Perm4: permutation index out of range");
    return lex_table()[idx];
}

Perm4 Perm4::from_string(const std::string& digits) {
    if (digits.size() != 4) throw tri_error("permutation needs exactly 4 digits");
    Perm4 p;
    bool seen[4] = {false, false, false, false};
    for (int i = 0; i < 4; ++i) {
        if (digits[i] < '0' || digits[i] > '3') throw tri_error("permutation digit out of range");
        int d = digits[i] - '0';
        if (seen[d]) throw tri_error("permutation repeats a digit");
        seen[d] = true;
        p.img[i] = uint8_t(d);
    }
    return p;
}

std::string Perm4::to_string() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) s[i] = char('0' + img[i]);
    return s;
}

namespace {
constexpr int kEdgeV[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
constexpr int kEdgeIdx[4][4] = {
    {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
constexpr int kEdgePair[6] = {0, 1, 2, 2, 1, 0};
}  // namespace

int edge_index_of(int u, int v) {
    if (u == v || u < 0 || v < 0 || u > 3 || v > 3) throw tri_error("bad edge vertices");
    return kEdgeIdx[u][v];
}

std::array<int, 2> edge_vertices(int edge_index) { return {kEdgeV[edge_index][0], kEdgeV[edge_index][1]}; }

int edge_pair_of(int edge_index) { return kEdgePair[edge_index]; }

std::array<int, 2> pair_edges(int pair) {
    switch (pair) {
        case 0: return {0, 5};
        case 1: return {1, 4};
        case 2: return {2, 3};
    }
    throw tri_error("bad edge pair");
}

int EdgeEmbedding::edge_index() const { return edge_index_of(std::min(tail, head), std::max(tail, head)); }

bool Triangulation::all_faces_glued() const {
    for (const auto& t : glue)
        for (const auto& g : t)
            if (!g.glued()) return false;
    return true;
}

bool Triangulation::connected() const {
    if (tet_count == 0) return true;
    std::vector<int> seen(tet_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            const auto& g = glue[t][f];
            if (g.glued() && !seen[g.tet]) {
                seen[g.tet] = 1;
                ++count;
                stack.push_back(g.tet);
            }
        }
    }
    return count == tet_count;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Renumber union-find roots in order of first appearance.
std::vector<int> compress_classes(UnionFind& uf, int n, int* count_out) {
    std::vector<int> id(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (id[r] < 0) id[r] = next++;
        id[i] = id[r];
    }
    if (count_out) *count_out = next;
    return id;
}

}  // namespace

void Triangulation::finalize() {
    if (tet_count <= 0) throw tri_error("triangulation needs at least one tetrahedron");
    if (static_cast<int>(glue.size()) != tet_count) throw tri_error("gluing table size mismatch");

    // Involutivity and face-correspondence checks.
    for (int t = 0; t < tet_count; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = glue[t][f];
            if (!g.glued()) {
                if (kind == TriKind::Ideal)
                    throw tri_error("ideal triangulation has an unglued face (tet " + std::to_string(t) +
                                    " face " + std::to_string(f) + ")");
                continue;
            }
            if (g.tet < 0 || g.tet >= tet_count)
                throw tri_error("gluing target out of range at tet " + std::to_string(t));
            int f2 = g.perm[f];
            if (g.tet == t && f2 == f) throw tri_error("face glued to itself");
            const auto& back = glue[g.tet][f2];
            if (!back.glued() || back.tet != t || !(back.perm == g.perm.inverse()) || back.perm[f2] != f)
                throw tri_error("gluings are not involutive at tet " + std::to_string(t) + " face " +
                                std::to_string(f));
        }

    // Vertex classes.
    {
        UnionFind uf(4 * tet_count);
        for (int t = 0; t < tet_count; ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = glue[t][f];
                if (!g.glued()) continue;
                for (int v = 0; v < 4; ++v)
                    if (v != f) uf.unite(4 * t + v, 4 * g.tet + g.perm[v]);
            }
        vertex_of = compress_classes(uf, 4 * tet_count, &vertex_count);
    }

    // Face classes.
    {
        UnionFind uf(4 * tet_count);
        for (int t = 0; t < tet_count; ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = glue[t][f];
                if (g.glued()) uf.unite(4 * t + f, 4 * g.tet + g.perm[f]);
            }
        face_of = compress_classes(uf, 4 * tet_count, &face_class_count);
    }

    // Edge classes via cyclic walks around each edge.
    edges.clear();
    edge_of.assign(6 * tet_count, -1);
    for (int t0 = 0; t0 < tet_count; ++t0)
        for (int e0 = 0; e0 < 6; ++e0) {
            if (edge_of[6 * t0 + e0] >= 0) continue;
            EdgeClass cls;
            cls.id = static_cast<int>(edges.size());

            auto [a0, b0] = edge_vertices(e0);
            int others[2];
            {
                int k = 0;
                for (int v = 0; v < 4; ++v)
                    if (v != a0 && v != b0) others[k++] = v;
            }
            // Forward walk exits through the face opposite others[1].
            auto walk = [&](int tet, int tail, int head, int exit_v,
                            std::vector<EdgeEmbedding>& out) -> bool {
                // Returns true when the walk closed up into a cycle.
                int t = tet, a = tail, b = head, p = exit_v;
                for (;;) {
                    const auto& g = glue[t][p];
                    if (!g.glued()) return false;
                    int t2 = g.tet, a2 = g.perm[a], b2 = g.perm[b], prev2 = g.perm[p];
                    int next2 = 6 - a2 - b2 - prev2;
                    if (t2 == tet && a2 == tail && b2 == head) return true;  // closed
                    if (t2 == tet && a2 == head && b2 == tail)
                        throw tri_error("edge identified with itself in reverse (tet " +
                                        std::to_string(tet) + ")");
                    for (const auto& em : out)
                        if (em.tet == t2 && em.tail == b2 && em.head == a2)
                            throw tri_error("edge identified with itself in reverse (tet " +
                                            std::to_string(t2) + ")");
                    out.push_back({t2, a2, b2, prev2, next2});
                    t = t2;
                    a = a2;
                    b = b2;
                    p = next2;
                    if (static_cast<int>(out.size()) > 6 * tet_count)
                        throw tri_error("edge walk failed to terminate");
                }
            };

            EdgeEmbedding start{t0, a0, b0, others[0], others[1]};
            std::vector<EdgeEmbedding> fwd;
            fwd.push_back(start);
            bool closed = walk(t0, a0, b0, others[1], fwd);
            if (closed) {
                cls.embeddings = fwd;
                cls.boundary = false;
            } else {
                // Walk backwards (exit through the other side) and prepend.
                std::vector<EdgeEmbedding> bwd;
                bwd.push_back({t0, b0, a0, others[1], others[0]});
                walk(t0, b0, a0, others[0], bwd);
                cls.embeddings.clear();
                for (size_t i = bwd.size(); i > 1; --i) {
                    EdgeEmbedding em = bwd[i - 1];
                    std::swap(em.tail, em.head);
                    std::swap(em.prev_vertex, em.next_vertex);
                    cls.embeddings.push_back(em);
                }
                for (const auto& em : fwd) cls.embeddings.push_back(em);
                cls.boundary = true;
            }
            cls.valence = static_cast<int>(cls.embeddings.size());
            for (const auto& em : cls.embeddings) {
                int idx = 6 * em.tet + em.edge_index();
                if (edge_of[idx] >= 0 && edge_of[idx] != cls.id)
                    throw tri_error("inconsistent edge identifications");
                edge_of[idx] = cls.id;
            }
            edges.push_back(std::move(cls));
        }

    int valence_sum = 0;
    for (const auto& e : edges) valence_sum += e.valence;
    if (valence_sum != 6 * tet_count) throw tri_error("edge valences do not sum to 6t");

    // Orientation: try to sign tetrahedra so every gluing permutation is odd.
    tet_orientation.assign(tet_count, 0);
    oriented = true;
    for (int seed = 0; seed < tet_count; ++seed) {
        if (tet_orientation[seed] != 0) continue;
        tet_orientation[seed] = 1;
        std::vector<int> stack{seed};
        while (!stack.empty() && oriented) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = glue[t][f];
                if (!g.glued()) continue;
                int want = (g.perm.sign() == -1) ? tet_orientation[t] : -tet_orientation[t];
                if (tet_orientation[g.tet] == 0) {
                    tet_orientation[g.tet] = want;
                    stack.push_back(g.tet);
                } else if (tet_orientation[g.tet] != want) {
                    oriented = false;
                    break;
                }
            }
        }
    }
}

Triangulation parse_gluing_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank) lines.push_back(line);
    }
    if (lines.empty()) throw tri_error("empty gluing file");

    Triangulation tri;
    {
        std::istringstream head(lines[0]);
        std::string word, kindspec;
        head >> word;
        if (word != "tets") throw tri_error("gluing file must start with 'tets N kind=...'");
        if (!(head >> tri.tet_count) || tri.tet_count <= 0) throw tri_error("bad tetrahedron count");
        head >> kindspec;
        if (kindspec == "kind=ideal")
            tri.kind = TriKind::Ideal;
        else if (kindspec == "kind=finite")
            tri.kind = TriKind::Finite;
        else
            throw tri_error("expected kind=ideal or kind=finite");
        std::string extra;
        if (head >> extra) throw tri_error("unexpected token in header: " + extra);
    }
    if (static_cast<int>(lines.size()) - 1 != tri.tet_count)
        throw tri_error("expected " + std::to_string(tri.tet_count) + " tetrahedron lines, got " +
                        std::to_string(lines.size() - 1));

    tri.glue.assign(tri.tet_count, {});
    for (int t = 0; t < tri.tet_count; ++t) {
        std::istringstream row(lines[t + 1]);
        for (int f = 0; f < 4; ++f) {
            std::string entry;
            if (!(row >> entry))
                throw tri_error("tet " + std::to_string(t) + ": expected 4 face entries");
            if (entry == "-") continue;
            auto colon = entry.find(':');
            if (colon == std::string::npos)
                throw tri_error("tet " + std::to_string(t) + " face " + std::to_string(f) +
                                ": malformed entry '" + entry + "'");
            int target;
            try {
                size_t used = 0;
                target = std::stoi(entry.substr(0, colon), &used);
                if (used != colon) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw tri_error("tet " + std::to_string(t) + ": bad target index in '" + entry + "'");
            }
            if (target < 0 || target >= tri.tet_count)
                throw tri_error("tet " + std::to_string(t) + ": target tetrahedron out of range");
            tri.glue[t][f] = {target, Perm4::from_string(entry.substr(colon + 1))};
        }
        std::string extra;
        if (row >> extra) throw tri_error("tet " + std::to_string(t) + ": trailing data '" + extra + "'");
    }
    tri.finalize();
    return tri;
}

// ---------------------------------------------------------------------------
// Isomorphism signatures
// ---------------------------------------------------------------------------

namespace {

const char kSigChars[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

int sig_val(char c) {
    if (c >= 'a' && c <= 'z') return c - 'a';
    if (c >= 'A' && c <= 'Z') return 26 + (c - 'A');
    if (c >= '0' && c <= '9') return 52 + (c - '0');
    if (c == '+') return 62;
    if (c == '-') return 63;
    return -1;
}

struct SigReader {
    const std::string& s;
    size_t pos = 0;
    explicit SigReader(const std::string& str) : s(str) {}
    bool done() const { return pos >= s.size(); }
    int next() {
        if (done()) throw tri_error("truncated signature");
        int v = sig_val(s[pos++]);
        if (v < 0) throw tri_error(std::string("invalid character '") + s[pos - 1] + "' in signature");
        return v;
    }
    size_t read_count(int* chars_used) {
        size_t n = static_cast<size_t>(next());
        if (n < 63) {
            *chars_used = 1;
            return n;
        }
        int nc = next();
        size_t val = 0;
        for (int i = 0; i < nc; ++i) val |= static_cast<size_t>(next()) << (6 * i);
        *chars_used = nc;
        return val;
    }
};

// Little-endian 2-bit packing, three values per character.
struct BitPacker {
    std::string out;
    int cur = 0, fill = 0;
    void push(int v) {
        cur |= v << (2 * fill);
        if (++fill == 3) flush();
    }
    void flush() {
        if (fill > 0) {
            out.push_back(kSigChars[cur]);
            cur = 0;
            fill = 0;
        }
    }
};

struct BitReader {
    SigReader& r;
    int cur = 0, left = 0;
    explicit BitReader(SigReader& reader) : r(reader) {}
    int next() {
        if (left == 0) {
            cur = r.next();
            left = 3;
        }
        int v = cur & 3;
        cur >>= 2;
        --left;
        return v;
    }
};

void append_count(std::string& out, size_t n) {
    if (n < 63) {
        out.push_back(kSigChars[n]);
        return;
    }
    int chars = 0;
    for (size_t v = n; v > 0; v >>= 6) ++chars;
    out.push_back(kSigChars[63]);
    out.push_back(kSigChars[chars]);
    for (int i = 0; i < chars; ++i) out.push_back(kSigChars[(n >> (6 * i)) & 63]);
}

// Signature candidates are compared as raw byte strings.
bool sig_less(const std::string& a, const std::string& b) { return a < b; }

std::string encode_component(const Triangulation& tri, const std::vector<int>& tets, int start,
                             const Perm4& start_perm) {
    const int n = static_cast<int>(tets.size());
    std::vector<int> image(tri.tet_count, -1);    // tet -> canonical label
    std::vector<int> preimage(n, -1);             // canonical label -> tet
    std::vector<Perm4> vmap(tri.tet_count);       // relabelling of vertices
    std::vector<std::array<bool, 4>> used(tri.tet_count, {false, false, false, false});

    image[start] = 0;
    preimage[0] = start;
    vmap[start] = start_perm;
    int next_label = 1;

    std::string actions_raw;
    std::vector<int> join_dest;
    std::vector<int> join_gluing;
    BitPacker actions;

    for (int label = 0; label < n; ++label) {
        int src = preimage[label];
        if (src < 0) throw tri_error("disconnected component in signature encoding");
        Perm4 inv = vmap[src].inverse();
        for (int fimg = 0; fimg < 4; ++fimg) {
            int f = inv[fimg];
            if (used[src][f]) continue;
            used[src][f] = true;
            const auto& g = tri.glue[src][f];
            if (!g.glued()) {
                actions.push(0);
                continue;
            }
            used[g.tet][g.perm[f]] = true;
            if (image[g.tet] < 0) {
                actions.push(1);
                image[g.tet] = next_label;
                preimage[next_label] = g.tet;
                vmap[g.tet] = vmap[src].after(g.perm.inverse());
                ++next_label;
            } else {
                actions.push(2);
                join_dest.push_back(image[g.tet]);
                join_gluing.push_back(vmap[g.tet].after(g.perm).after(vmap[src].inverse()).lex_index());
            }
        }
    }
    actions.flush();

    std::string out;
    append_count(out, static_cast<size_t>(n));
    out += actions.out;
    // Destinations use the same width as the size encoding.
    for (int d : join_dest) {
        if (n < 63)
            out.push_back(kSigChars[d]);
        else {
            int chars = 0;
            for (size_t v = static_cast<size_t>(n); v > 0; v >>= 6) ++chars;
            for (int i = 0; i < chars; ++i) out.push_back(kSigChars[(d >> (6 * i)) & 63]);
        }
    }
    for (int p : join_gluing) out.push_back(kSigChars[p]);
    return out;
}

}  // namespace

std::string encode_isosig(const Triangulation& tri) {
    // Split into connected components of the gluing graph.
    std::vector<int> comp(tri.tet_count, -1);
    int ncomp = 0;
    for (int seed = 0; seed < tri.tet_count; ++seed) {
        if (comp[seed] >= 0) continue;
        comp[seed] = ncomp;
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.glue[t][f];
                if (g.glued() && comp[g.tet] < 0) {
                    comp[g.tet] = ncomp;
                    stack.push_back(g.tet);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::string> sigs;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> tets;
        for (int t = 0; t < tri.tet_count; ++t)
            if (comp[t] == c) tets.push_back(t);
        std::string best;
        for (int start : tets)
            for (int pi = 0; pi < 24; ++pi) {
                std::string cand = encode_component(tri, tets, start, Perm4::from_lex_index(pi));
                if (best.empty() || sig_less(cand, best)) best = std::move(cand);
            }
        sigs.push_back(std::move(best));
    }
    std::sort(sigs.begin(), sigs.end(), sig_less);
    std::string out;
    for (const auto& s : sigs) out += s;
    return out;
}

Triangulation decode_isosig(const std::string& signature) {
    std::string sig;
    for (char c : signature) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        sig.push_back(c);
    }
    // Boundary-framing decorations are not used by the counting pipeline.
    auto underscore = sig.find('_');
    if (underscore != std::string::npos) sig.erase(underscore);
    if (sig.empty()) throw tri_error("empty signature");
    for (char c : sig)
        if (sig_val(c) < 0) throw tri_error(std::string("invalid character '") + c + "' in signature");

    Triangulation tri;
    tri.glue.clear();
    SigReader r(sig);
    while (!r.done()) {
        int size_chars = 0;
        size_t nsimp = r.read_count(&size_chars);
        if (nsimp == 0) throw tri_error("signature encodes an empty component");
        int base = tri.tet_count;
        tri.tet_count += static_cast<int>(nsimp);
        tri.glue.resize(tri.tet_count);

        // The action stream is consumed by facet coverage: a boundary action
        // covers one facet, a join covers both sides of the gluing.
        BitReader bits(r);
        std::vector<int> actions;
        size_t covered = 0;
        size_t njoins = 0;
        while (covered < 4 * nsimp) {
            int action = bits.next();
            if (action == 0)
                covered += 1;
            else if (action == 1 || action == 2)
                covered += 2;
            else
                throw tri_error("invalid facet action in signature");
            if (action == 2) ++njoins;
            actions.push_back(action);
            if (covered > 4 * nsimp) throw tri_error("signature facet actions overrun");
        }

        int dest_chars = 1;
        if (nsimp >= 63) {
            dest_chars = 0;
            for (size_t v = nsimp; v > 0; v >>= 6) ++dest_chars;
        }
        std::vector<int> dests;
        for (size_t i = 0; i < njoins; ++i) {
            size_t d = 0;
            for (int k = 0; k < dest_chars; ++k) d |= static_cast<size_t>(r.next()) << (6 * k);
            if (d >= nsimp) throw tri_error("signature join destination out of range");
            dests.push_back(static_cast<int>(d));
        }
        std::vector<Perm4> perms;
        for (size_t i = 0; i < njoins; ++i) perms.push_back(Perm4::from_lex_index(r.next()));

        // Replay the canonical facet scan, applying joins as they appear.
        size_t action_pos = 0, join_pos = 0;
        int created = 1;
        for (size_t s = 0; s < nsimp; ++s)
            for (int f = 0; f < 4; ++f) {
                if (tri.glue[base + s][f].glued()) continue;
                if (action_pos >= actions.size()) throw tri_error("signature ran out of facet actions");
                int action = actions[action_pos++];
                if (action == 0) continue;
                if (action == 1) {
                    if (created >= static_cast<int>(nsimp))
                        throw tri_error("signature joins more new simplices than declared");
                    int dest = created++;
                    if (tri.glue[base + dest][f].glued())
                        throw tri_error("signature gluing collides with an earlier one");
                    tri.glue[base + s][f] = {base + dest, Perm4()};
                    tri.glue[base + dest][f] = {base + static_cast<int>(s), Perm4()};
                } else {
                    int d = dests[join_pos];
                    Perm4 p = perms[join_pos];
                    ++join_pos;
                    int f2 = p[f];
                    if (d == static_cast<int>(s) && f2 == f)
                        throw tri_error("signature glues a face to itself");
                    if (d >= created) throw tri_error("signature join targets an unseen simplex");
                    if (tri.glue[base + d][f2].glued())
                        throw tri_error("signature gluing collides with an earlier one");
                    tri.glue[base + s][f] = {base + d, p};
                    tri.glue[base + d][f2] = {base + static_cast<int>(s), p.inverse()};
                }
            }
        if (action_pos != actions.size()) throw tri_error("signature has unused facet actions");
        if (created != static_cast<int>(nsimp)) throw tri_error("signature component is disconnected");
    }

    tri.kind = tri.all_faces_glued() ? TriKind::Ideal : TriKind::Finite;
    tri.finalize();
    return tri;
}

Triangulation triangulation_from_text(const std::string& text) {
    // Gluing files contain whitespace; signatures never do.
    std::string trimmed = text;
    while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r' || trimmed.back() == ' '))
        trimmed.pop_back();
    if (trimmed.find_first_of(" \t\n") == std::string::npos) return decode_isosig(trimmed);
    return parse_gluing_file(text);
}

Triangulation triangulation_from_spec(const std::string& spec) {
    FILE* f = std::fopen(spec.c_str(), "rb");
    if (f) {
        std::string text;
        char buf[4096];
        size_t got;
        while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
        std::fclose(f);
        return triangulation_from_text(text);
    }
    return decode_isosig(spec);
}

std::optional<AngleStructure> find_angle_structure(const Triangulation& tri, AngleStrictness strictness) {
    if (tri.kind != TriKind::Ideal) throw tri_error("angle structures require an ideal triangulation");
    const int n = 3 * tri.tet_count;
    std::vector<std::vector<Int>> rows;
    std::vector<Rat> rhs;
    for (int t = 0; t < tri.tet_count; ++t) {
        std::vector<Int> row(n);
        for (int k = 0; k < 3; ++k) row[3 * t + k] = 1;
        rows.push_back(std::move(row));
        rhs.push_back(1);
    }
    for (const auto& e : tri.edges) {
        std::vector<Int> row(n);
        for (const auto& em : e.embeddings) row[3 * em.tet + edge_pair_of(em.edge_index())] += 1;
        rows.push_back(std::move(row));
        rhs.push_back(2);
    }
    FeasibilityQuery q;
    q.equalities = IntMat(static_cast<int>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) q.equalities.at(static_cast<int>(i), j) = rows[i][j];
    q.rhs = rhs;
    for (int j = 0; j < n; ++j) q.nonneg_indices.push_back(j);
    if (strictness == AngleStrictness::Strict)
        for (int j = 0; j < n; ++j) q.strict_positive_sums.push_back({j});
    auto x = lp_feasible(q);
    if (!x) return std::nullopt;
    AngleStructure a;
    a.angles.resize(tri.tet_count);
    for (int t = 0; t < tri.tet_count; ++t)
        for (int k = 0; k < 3; ++k) a.angles[t][k] = (*x)[3 * t + k];
    return a;
}

}  // namespace surfcount
