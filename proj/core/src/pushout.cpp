#include <algorithm>
#include <map>

#include "wtop/weighted_category.hpp"

namespace wtop {

namespace {

struct Generator {
    std::size_t src = 0, dst = 0;  // pushout object indices
    ExtWeight w;
    // Index of this arrow inside each piece; npos when absent from a piece.
    std::size_t in_piece[2] = {FiniteWeightedCategory::npos, FiniteWeightedCategory::npos};
    std::string name;
};

using Word = std::vector<std::uint32_t>;

struct UnionFind {
    std::vector<std::size_t> parent;
    std::size_t add() {
        parent.push_back(parent.size());
        return parent.size() - 1;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

void check_full_embedding(const FiniteWeightedCategory& C0, const FiniteWeightedCategory& Ci,
                          const WFunctor& u, const char* which) {
    check_functor(C0, Ci, u);
    const std::string tag = std::string("pushout leg ") + which;
    for (std::size_t x = 0; x < C0.objects.size(); ++x)
        for (std::size_t y = 0; y < C0.objects.size(); ++y)
            if (x != y && u.obj[x] == u.obj[y])
                throw ValidationError(tag + " is not injective on objects");
    for (std::size_t a = 0; a < C0.morphisms.size(); ++a) {
        if (!(Ci.morphisms[u.mor[a]].w == C0.morphisms[a].w))
            throw ValidationError(tag + " does not preserve weights exactly");
        for (std::size_t b = 0; b < C0.morphisms.size(); ++b)
            if (a != b && u.mor[a] == u.mor[b]) throw ValidationError(tag + " is not faithful");
    }
    // Fullness: every arrow of Ci between image objects comes from C0.
    std::vector<bool> img_obj(Ci.objects.size(), false);
    for (auto o : u.obj) img_obj[o] = true;
    std::vector<bool> img_mor(Ci.morphisms.size(), false);
    for (auto f : u.mor) img_mor[f] = true;
    for (std::size_t f = 0; f < Ci.morphisms.size(); ++f)
        if (img_obj[Ci.morphisms[f].src] && img_obj[Ci.morphisms[f].dst] && !img_mor[f])
            throw ValidationError(tag + " is not full: " + Ci.morphisms[f].name +
                                  " lies between image objects but outside the image");
}

}  // namespace

PushoutResult pushout_wcat(const FiniteWeightedCategory& C0, const FiniteWeightedCategory& C1,
                           const FiniteWeightedCategory& C2, const WFunctor& u1,
                           const WFunctor& u2, std::size_t word_cap) {
    check_full_embedding(C0, C1, u1, "u1");
    check_full_embedding(C0, C2, u2, "u2");

    // Pushout objects: C1's objects, then the C2 objects not in u2's image.
    const std::size_t n1 = C1.objects.size();
    std::vector<std::size_t> c2_obj(C2.objects.size(), FiniteWeightedCategory::npos);
    for (std::size_t x = 0; x < C0.objects.size(); ++x) c2_obj[u2.obj[x]] = u1.obj[x];
    std::vector<std::string> objects = C1.objects;
    for (std::size_t j = 0; j < C2.objects.size(); ++j)
        if (c2_obj[j] == FiniteWeightedCategory::npos) {
            c2_obj[j] = objects.size();
            std::string name = C2.objects[j];
            while (std::find(objects.begin(), objects.end(), name) != objects.end()) name += "'";
            objects.push_back(std::move(name));
        }

    // Generator alphabet: non-identity morphisms, with the two copies of a
    // C0 morphism identified (they carry both piece tags).
    std::vector<Generator> gens;
    std::vector<std::size_t> gen_of_c1(C1.morphisms.size(), FiniteWeightedCategory::npos);
    std::vector<std::size_t> gen_of_c2(C2.morphisms.size(), FiniteWeightedCategory::npos);
    for (std::size_t f = 0; f < C1.morphisms.size(); ++f) {
        if (C1.is_identity(f)) continue;
        Generator g;
        g.src = C1.morphisms[f].src;
        g.dst = C1.morphisms[f].dst;
        g.w = C1.morphisms[f].w;
        g.in_piece[0] = f;
        g.name = C1.morphisms[f].name;
        gen_of_c1[f] = gens.size();
        gens.push_back(std::move(g));
    }
    for (std::size_t a = 0; a < C0.morphisms.size(); ++a) {
        if (C0.is_identity(a)) continue;
        gens[gen_of_c1[u1.mor[a]]].in_piece[1] = u2.mor[a];
        gen_of_c2[u2.mor[a]] = gen_of_c1[u1.mor[a]];
    }
    for (std::size_t f = 0; f < C2.morphisms.size(); ++f) {
        if (C2.is_identity(f) || gen_of_c2[f] != FiniteWeightedCategory::npos) continue;
        Generator g;
        g.src = c2_obj[C2.morphisms[f].src];
        g.dst = c2_obj[C2.morphisms[f].dst];
        g.w = C2.morphisms[f].w;
        g.in_piece[1] = f;
        g.name = C2.morphisms[f].name;
        gen_of_c2[f] = gens.size();
        gens.push_back(std::move(g));
    }
    auto piece_mor_to_gen = [&](int piece, std::size_t f) {
        return piece == 0 ? gen_of_c1[f] : gen_of_c2[f];
    };

    // Word dictionary and congruence. Empty words stand for identities.
    UnionFind uf;
    std::map<Word, std::size_t> dict;
    std::vector<std::size_t> empty_node(objects.size());
    std::vector<std::size_t> node_src, node_dst;
    std::vector<Word> node_word;
    auto add_node = [&](const Word& w, std::size_t src, std::size_t dst) {
        std::size_t id = uf.add();
        dict[w] = id;
        node_src.push_back(src);
        node_dst.push_back(dst);
        node_word.push_back(w);
        if (dict.size() > word_cap)
            throw SizeLimitExceeded("pushout word saturation exceeds cap");
        return id;
    };
    for (std::size_t x = 0; x < objects.size(); ++x) empty_node[x] = add_node(Word{}, x, x);

    // One-step reduction of the pair at position i, if some piece composes it.
    auto reduce_at = [&](const Word& w, std::size_t i) -> std::optional<Word> {
        const Generator& a = gens[w[i]];
        const Generator& b = gens[w[i + 1]];
        for (int piece = 0; piece < 2; ++piece) {
            if (a.in_piece[piece] == FiniteWeightedCategory::npos ||
                b.in_piece[piece] == FiniteWeightedCategory::npos)
                continue;
            const FiniteWeightedCategory& P = piece == 0 ? C1 : C2;
            std::size_t c = P.then(a.in_piece[piece], b.in_piece[piece]);
            Word out(w.begin(), w.begin() + i);
            if (!P.is_identity(c)) out.push_back(static_cast<std::uint32_t>(piece_mor_to_gen(piece, c)));
            out.insert(out.end(), w.begin() + i + 2, w.end());
            return out;
        }
        return std::nullopt;
    };

    // Saturate by word length until every word at the frontier is congruent
    // to a shorter one; then the congruence is fully determined below that
    // length (appending a generator commutes with the rewrites).
    std::vector<std::size_t> frontier;  // node ids at the current length
    for (std::uint32_t g = 0; g < gens.size(); ++g)
        frontier.push_back(add_node(Word{g}, gens[g].src, gens[g].dst));
    std::vector<std::size_t> root_min_len(uf.parent.size(), 0);
    for (std::size_t id = 0; id < uf.parent.size(); ++id)
        root_min_len[id] = node_word[id].size();
    auto note_union = [&](std::size_t a, std::size_t b) {
        std::size_t ra = uf.find(a), rb = uf.find(b);
        std::size_t m = std::min(root_min_len[ra], root_min_len[rb]);
        uf.unite(ra, rb);
        root_min_len[uf.find(ra)] = m;
    };
    std::size_t length = 1;
    const std::size_t max_length = 64;
    std::size_t closure_limit = 0;  // set once the frontier fully reduces
    while (true) {
        // Reduction edges for the current frontier.
        for (auto id : frontier) {
            const Word w = node_word[id];
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                auto red = reduce_at(w, i);
                if (!red) continue;
                auto it = dict.find(*red);
                std::size_t rid = it != dict.end()
                                      ? it->second
                                      : add_node(*red, node_src[id], node_dst[id]);
                if (rid >= root_min_len.size()) root_min_len.resize(rid + 1, red->size());
                note_union(id, rid);
            }
        }
        if (closure_limit == 0) {
            bool all_reduce = true;
            for (auto id : frontier)
                if (root_min_len[uf.find(id)] >= length) {
                    all_reduce = false;
                    break;
                }
            if (all_reduce) {
                // Irreducible words all live below `length`; keep saturating
                // up to twice that so that concatenations of representatives
                // stay inside the dictionary.
                closure_limit = 2 * (length - 1);
                if (closure_limit <= length) break;
            }
        }
        if (closure_limit != 0 && length >= closure_limit) break;
        if (++length > max_length)
            throw SizeLimitExceeded("pushout word saturation does not terminate within the cap");
        std::vector<std::size_t> next;
        for (auto id : frontier) {
            const Word w = node_word[id];
            for (std::uint32_t g = 0; g < gens.size(); ++g) {
                if (gens[g].src != node_dst[id]) continue;
                Word ext = w;
                ext.push_back(g);
                if (dict.find(ext) == dict.end()) {
                    std::size_t nid = add_node(ext, node_src[id], gens[g].dst);
                    if (nid >= root_min_len.size()) root_min_len.resize(nid + 1, ext.size());
                    next.push_back(nid);
                }
            }
        }
        if (next.empty()) break;  // no composable words of this length at all
        frontier = std::move(next);
    }

    // Collect classes in first-appearance order.
    std::vector<std::size_t> class_of_root(uf.parent.size(), FiniteWeightedCategory::npos);
    std::vector<std::size_t> class_rep_node;
    for (std::size_t id = 0; id < node_word.size(); ++id) {
        std::size_t r = uf.find(id);
        if (class_of_root[r] == FiniteWeightedCategory::npos) {
            class_of_root[r] = class_rep_node.size();
            class_rep_node.push_back(id);
        }
    }
    auto class_of_node = [&](std::size_t id) { return class_of_root[uf.find(id)]; };

    PushoutResult out;
    auto& cat = out.category;
    cat.objects = objects;
    const std::size_t nclasses = class_rep_node.size();
    std::vector<ExtWeight> weight(nclasses, ExtWeight::infinity());
    std::vector<Word> rep(nclasses);
    std::vector<bool> rep_set(nclasses, false);
    for (std::size_t id = 0; id < node_word.size(); ++id) {
        std::size_t c = class_of_node(id);
        ExtWeight w = ExtWeight::zero();
        for (auto g : node_word[id]) w += gens[g].w;
        if (w < weight[c]) weight[c] = w;
        if (!rep_set[c] || node_word[id].size() < rep[c].size() ||
            (node_word[id].size() == rep[c].size() && node_word[id] < rep[c])) {
            rep[c] = node_word[id];
            rep_set[c] = true;
        }
    }
    cat.identity.assign(objects.size(), FiniteWeightedCategory::npos);
    for (std::size_t c = 0; c < nclasses; ++c) {
        FiniteWeightedCategory::Morphism m;
        std::size_t node = class_rep_node[c];
        m.src = node_src[node];
        m.dst = node_dst[node];
        m.w = weight[c];
        if (rep[c].empty()) {
            m.name = "id_" + objects[m.src];
            cat.identity[m.src] = c;
        } else {
            m.name = gens[rep[c][0]].name;
            for (std::size_t i = 1; i < rep[c].size(); ++i) m.name += "." + gens[rep[c][i]].name;
        }
        cat.morphisms.push_back(std::move(m));
    }
    const auto np = FiniteWeightedCategory::npos;
    cat.then_table.assign(nclasses, std::vector<std::size_t>(nclasses, np));
    for (std::size_t a = 0; a < nclasses; ++a)
        for (std::size_t b = 0; b < nclasses; ++b) {
            if (cat.morphisms[a].dst != cat.morphisms[b].src) continue;
            Word w = rep[a];
            w.insert(w.end(), rep[b].begin(), rep[b].end());
            // Greedy full reduction, then dictionary lookup.
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                    auto red = reduce_at(w, i);
                    if (red) {
                        w = std::move(*red);
                        changed = true;
                        break;
                    }
                }
            }
            std::size_t node;
            if (w.empty()) {
                node = empty_node[cat.morphisms[a].src];
            } else {
                auto it = dict.find(w);
                if (it == dict.end())
                    throw SizeLimitExceeded("pushout composition fell outside the saturated dictionary");
                node = it->second;
            }
            cat.then_table[a][b] = class_of_node(node);
        }

    // Injections.
    out.inj1.obj.resize(C1.objects.size());
    for (std::size_t x = 0; x < C1.objects.size(); ++x) out.inj1.obj[x] = x;
    out.inj1.mor.resize(C1.morphisms.size());
    for (std::size_t f = 0; f < C1.morphisms.size(); ++f)
        out.inj1.mor[f] = C1.is_identity(f)
                              ? class_of_node(empty_node[C1.morphisms[f].src])
                              : class_of_node(dict.at(Word{static_cast<std::uint32_t>(gen_of_c1[f])}));
    out.inj2.obj.resize(C2.objects.size());
    for (std::size_t x = 0; x < C2.objects.size(); ++x) out.inj2.obj[x] = c2_obj[x];
    out.inj2.mor.resize(C2.morphisms.size());
    for (std::size_t f = 0; f < C2.morphisms.size(); ++f)
        out.inj2.mor[f] = C2.is_identity(f)
                              ? class_of_node(empty_node[c2_obj[C2.morphisms[f].src]])
                              : class_of_node(dict.at(Word{static_cast<std::uint32_t>(gen_of_c2[f])}));
    return out;
}

}  // namespace wtop
