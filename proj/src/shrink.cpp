#include "berge/shrink.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "berge/berge_search.hpp"
#include "berge/bigraph.hpp"
#include "berge/bounds.hpp"
#include "json.hpp"

namespace berge {

std::optional<int> find_menace(const Hypergraph& h, int e, int v) {
    if (!contains(h.edge(e), v)) throw std::invalid_argument("v is not in the edge");
    VertexSet rest = without(h.edge(e), v);
    for (int m = 0; m < h.edge_count(); ++m)
        if (m != e && subset_of(rest, h.edge(m))) return m;
    return std::nullopt;
}

namespace {

std::vector<int> incident_edges(const Hypergraph& h, int v) {
    std::vector<int> out;
    for (int e = 0; e < h.edge_count(); ++e)
        if (contains(h.edge(e), v)) out.push_back(e);
    return out;
}

}  // namespace

bool is_special_vertex(const Hypergraph& h, int v) {
    std::vector<int> inc = incident_edges(h, v);
    if (inc.size() != 2) return false;
    for (int e : inc)
        if (h.edge_size(e) != 2 && is_happy_edge(h, e)) return false;
    return true;
}

std::vector<int> special_vertices(const Hypergraph& h) {
    std::vector<int> out;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (is_special_vertex(h, v)) out.push_back(v);
    return out;
}

bool is_special_edge(const Hypergraph& h, int e) {
    if (h.edge_size(e) != 2) return false;
    std::vector<int> vs = h.edge_vertices(e);
    for (int v : vs) {
        if (!is_special_vertex(h, v)) return false;
        std::vector<int> inc = incident_edges(h, v);
        int flank = inc[0] == e ? inc[1] : inc[0];
        if (is_happy_edge(h, flank)) return false;
    }
    return true;
}

std::vector<int> special_edges(const Hypergraph& h) {
    std::vector<int> out;
    for (int e = 0; e < h.edge_count(); ++e)
        if (is_special_edge(h, e)) out.push_back(e);
    return out;
}

std::string kind_name(ShrinkKind k) {
    switch (k) {
        case ShrinkKind::T1: return "T1";
        case ShrinkKind::T2: return "T2";
        case ShrinkKind::T3: return "T3";
        case ShrinkKind::T4: return "T4";
        case ShrinkKind::T5: return "T5";
    }
    return "?";
}

EditResult apply_T1(const Hypergraph& h, int e, int v) {
    if (is_happy_edge(h, e)) throw std::invalid_argument("T1 needs an unhappy edge");
    if (!contains(h.edge(e), v)) throw std::invalid_argument("T1: v not in e");
    EditResult out;
    out.edges.assign(h.edges().begin(), h.edges().end());
    out.edges[static_cast<size_t>(e)] = without(h.edge(e), v);
    return out;
}

EditResult apply_T2(const Hypergraph& h, int v) {
    if (!is_special_vertex(h, v)) throw std::invalid_argument("T2 needs a special vertex");
    EditResult out;
    out.removed = single(v);
    for (int e = 0; e < h.edge_count(); ++e) {
        VertexSet s = without(h.edge(e), v);
        if (s == h.edge(e)) {
            out.edges.push_back(s);
        } else if (set_size(s) >= 2) {
            out.edges.push_back(s);  // shrunk
        }
        // a graph edge at v disappears
    }
    return out;
}

EditResult apply_T3(const Hypergraph& h, int special_edge_index) {
    if (!is_special_edge(h, special_edge_index))
        throw std::invalid_argument("T3 needs a special edge");
    VertexSet vu = h.edge(special_edge_index);
    EditResult out;
    out.removed = vu;
    for (int e = 0; e < h.edge_count(); ++e) {
        if (e == special_edge_index) continue;
        out.edges.push_back(h.edge(e) & ~vu);
    }
    return out;
}

EditResult apply_T4(const Hypergraph& h, int e, int keep) {
    if (is_happy_edge(h, e)) throw std::invalid_argument("T4 needs an unhappy edge");
    if (!contains(h.edge(e), keep)) throw std::invalid_argument("T4: keep not in e");
    VertexSet glue = without(h.edge(e), keep);
    int target = lowest(glue);
    EditResult out;
    out.removed = without(glue, target);
    for (int i = 0; i < h.edge_count(); ++i) {
        VertexSet f = h.edge(i);
        if (f & glue)
            out.edges.push_back(with(f & ~glue, target));
        else
            out.edges.push_back(f);
    }
    return out;
}

namespace {

EditResult t5_rewrite(const Hypergraph& h, VertexSet members, int x, int y) {
    VertexSet interior = members & ~with(single(x), y);
    EditResult out;
    out.removed = interior;
    bool have_xy = false;
    VertexSet xy = with(single(x), y);
    for (int e = 0; e < h.edge_count(); ++e) {
        if (h.edge(e) & interior) continue;
        if (h.edge(e) == xy) have_xy = true;
        out.edges.push_back(h.edge(e));
    }
    if (!have_xy) out.edges.push_back(xy);
    return out;
}

void verify_special_block(const Hypergraph& h, const TwoBlock& block) {
    for (const TwoBlock& tb : special_two_blocks(h)) {
        if (tb.members == block.members && tb.outer_x == block.outer_x &&
            tb.outer_y == block.outer_y)
            return;
    }
    throw std::invalid_argument("T5 needs a special 2-block of the input");
}

}  // namespace

EditResult apply_T5(const Hypergraph& h, const TwoBlock& block) {
    if (!block.special) throw std::invalid_argument("T5 needs a special 2-block");
    return t5_rewrite(h, vector_to_set(block.members), block.outer_x, block.outer_y);
}

EditResult apply_params(const Hypergraph& h, const ShrinkParams& p) {
    switch (p.kind) {
        case ShrinkKind::T1: {
            int e = h.find_edge(vector_to_set(p.edge));
            if (e < 0) throw std::invalid_argument("T1: edge not present");
            return apply_T1(h, e, p.v1);
        }
        case ShrinkKind::T2:
            return apply_T2(h, p.v1);
        case ShrinkKind::T3: {
            int e = h.find_edge(vector_to_set(p.edge));
            if (e < 0) throw std::invalid_argument("T3: edge not present");
            return apply_T3(h, e);
        }
        case ShrinkKind::T4: {
            int e = h.find_edge(vector_to_set(p.edge));
            if (e < 0) throw std::invalid_argument("T4: edge not present");
            return apply_T4(h, e, p.v1);
        }
        case ShrinkKind::T5: {
            TwoBlock tb;
            tb.members = p.edge;
            tb.outer_x = p.v1;
            tb.outer_y = p.v2;
            verify_special_block(h, tb);
            return t5_rewrite(h, vector_to_set(p.edge), p.v1, p.v2);
        }
    }
    throw std::logic_error("unknown kind");
}

std::optional<CompactResult> compact_edit(const Hypergraph& h, const EditResult& edit,
                                          std::string* why_not) {
    auto complain = [&](const std::string& s) {
        if (why_not) *why_not = s;
        return std::nullopt;
    };
    std::vector<VertexSet> sorted = edit.edges;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) return complain("duplicate edges");
    for (VertexSet e : edit.edges) {
        int sz = set_size(e);
        if (sz < 2) return complain("edge of size < 2");
        if (sz > h.upper_rank()) return complain("edge exceeds rank");
    }
    VertexSet survivors = full_set(h.vertex_count()) & ~edit.removed;
    std::vector<int> old_label = set_to_vector(survivors);
    std::vector<int> new_label(static_cast<size_t>(h.vertex_count()), -1);
    for (size_t i = 0; i < old_label.size(); ++i)
        new_label[static_cast<size_t>(old_label[i])] = static_cast<int>(i);
    std::vector<VertexSet> relabeled;
    relabeled.reserve(edit.edges.size());
    for (VertexSet e : edit.edges) {
        if (e & edit.removed) return complain("edge touches a removed vertex");
        VertexSet s = 0;
        for_each_bit(e, [&](int v) { s = with(s, new_label[static_cast<size_t>(v)]); });
        relabeled.push_back(s);
    }
    CompactResult res{Hypergraph::from_sets(static_cast<int>(old_label.size()), h.upper_rank(),
                                            std::move(relabeled)),
                      std::move(old_label)};
    return res;
}

Metrics metrics_of(const Hypergraph& h) {
    return Metrics{h.vertex_count(), h.edge_count(), h.sum_edge_sizes()};
}

std::string StepValidation::summary() const {
    std::string s;
    auto add = [&](bool ok, const char* name) {
        if (!ok) {
            if (!s.empty()) s += ", ";
            s += name;
        }
    };
    add(sizes_ok, "edge sizes");
    add(sperner_ok, "Sperner (S3)");
    add(two_connected_ok, "2-connected (S1)");
    add(counts_ok, "counts (S2)");
    add(edge_drop_ok, "edge drop cap (S4)");
    add(circumference_ok, "circumference (S5)");
    return s.empty() ? "valid" : "failed: " + s;
}

StepValidation validate_step(const Hypergraph& h, const EditResult& edit, int k, bool is_t5) {
    StepValidation v;
    int n = h.vertex_count();
    int n2 = n - set_size(edit.removed);
    int m = h.edge_count();
    int m2 = static_cast<int>(edit.edges.size());
    int sum = h.sum_edge_sizes();
    int sum2 = 0;
    v.sizes_ok = true;
    for (VertexSet e : edit.edges) {
        int sz = set_size(e);
        sum2 += sz;
        if (sz < 2 || sz > h.upper_rank()) v.sizes_ok = false;
    }

    std::vector<VertexSet> sorted = edit.edges;
    std::sort(sorted.begin(), sorted.end());
    bool dup = false;
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) dup = true;
    bool antichain = true;
    for (size_t i = 0; i < edit.edges.size() && antichain; ++i)
        for (size_t j = 0; j < edit.edges.size(); ++j)
            if (i != j && edit.edges[i] != edit.edges[j] &&
                subset_of(edit.edges[i], edit.edges[j])) {
                antichain = false;
                break;
            }
    v.sperner_ok = !dup && antichain;

    v.counts_ok = sum2 <= sum && n2 <= n && sum2 + n2 < sum + n;
    int drop = m - m2;
    if (is_t5) {
        int t = (k - 1) / 2;
        Count cap = binomial(t, std::min(h.upper_rank() - 1, t / 2)) * (n - n2);
        v.edge_drop_ok = Count(drop) <= cap;
    } else {
        v.edge_drop_ok = drop <= n - n2;
    }

    if (v.sizes_ok && !dup) {
        auto compacted = compact_edit(h, edit);
        if (compacted) {
            v.two_connected_ok = is_2connected(compacted->h);
            if (v.sperner_ok && v.two_connected_ok && v.counts_ok && v.edge_drop_ok) {
                SearchOutcome c = circumference(compacted->h, k);
                v.circumference_ok = c.length < k;
            }
            v.result = std::move(compacted->h);
        }
    }
    return v;
}

namespace {

struct Accepted {
    ShrinkStep step;
    Hypergraph next;
    std::optional<TwoBlock> used_block;
};

std::optional<Accepted> try_candidate(const Hypergraph& h, int k, const ShrinkParams& p,
                                      const EditResult& edit,
                                      const std::optional<TwoBlock>& block = std::nullopt) {
    StepValidation v = validate_step(h, edit, k, p.kind == ShrinkKind::T5);
    if (!v.valid()) return std::nullopt;
    Accepted acc{ShrinkStep{p, metrics_of(h), metrics_of(*v.result)}, std::move(*v.result),
                 block};
    return acc;
}

// Connected components of I(h) minus A-node a and Y-node x, unified ids.
std::vector<std::vector<int>> components_minus(const LayeredBigraph& b, int a_node, int x) {
    auto adj = b.unified_adjacency();
    int n = b.node_count();
    std::vector<char> blocked(static_cast<size_t>(n), 0), seen(static_cast<size_t>(n), 0);
    blocked[static_cast<size_t>(a_node)] = 1;
    blocked[static_cast<size_t>(b.y_node(x))] = 1;
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)] || blocked[static_cast<size_t>(s)]) continue;
        std::vector<int> comp, stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : adj[static_cast<size_t>(u)])
                if (!seen[static_cast<size_t>(w)] && !blocked[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

struct SubHypergraph {
    Hypergraph h;
    std::vector<int> vertices;
};

SubHypergraph induced_sub(const Hypergraph& h, const std::vector<int>& vertices,
                          const std::vector<int>& edge_indices) {
    std::vector<int> pos(static_cast<size_t>(h.vertex_count()), -1);
    for (size_t i = 0; i < vertices.size(); ++i)
        pos[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<VertexSet> edges;
    for (int e : edge_indices) {
        VertexSet s = 0;
        for_each_bit(h.edge(e), [&](int v) { s = with(s, pos[static_cast<size_t>(v)]); });
        edges.push_back(s);
    }
    return SubHypergraph{
        Hypergraph::from_sets(static_cast<int>(vertices.size()), h.upper_rank(), std::move(edges)),
        vertices};
}

}  // namespace

BlockReport block_report_search(const Hypergraph& h, int k) {
    BlockReport best;
    LayeredBigraph b = incidence_bigraph(h);
    for (int a : unhappy_edges(h)) {
        BlockReport rep;
        rep.unhappy_edge = a;
        std::vector<BlockTriple> cands;
        for (int x = 0; x < h.vertex_count(); ++x) {
            auto comps = components_minus(b, b.a_node(a), x);
            if (comps.size() < 2) continue;
            for (const auto& comp : comps) {
                std::vector<int> members{x};
                std::vector<int> edge_idx;
                for (int node : comp) {
                    if (b.is_a_node(node))
                        edge_idx.push_back(node);
                    else
                        members.push_back(node - b.a_count());
                }
                std::sort(members.begin(), members.end());
                VertexSet member_set = vector_to_set(members);
                VertexSet meet = h.edge(a) & member_set;
                if (set_size(meet) != 1) continue;  // (B1)
                int y = lowest(meet);
                if (y == x) continue;
                if (edge_idx.empty()) continue;
                SubHypergraph sub = induced_sub(h, members, edge_idx);
                // (B2); a single edge counts as a degenerate block
                bool two_conn = is_2connected(sub.h) || sub.h.edge_count() == 1;
                if (!two_conn || !is_sperner(sub.h)) continue;
                // (B4): remainder after deleting B_i - x and the edge a
                std::vector<int> rem_vertices, rem_edges;
                VertexSet interior = member_set & ~single(x);
                for (int v = 0; v < h.vertex_count(); ++v)
                    if (!contains(interior, v)) rem_vertices.push_back(v);
                for (int e = 0; e < h.edge_count(); ++e) {
                    if (e == a) continue;
                    if (h.edge(e) & interior) continue;
                    rem_edges.push_back(e);
                }
                SubHypergraph rem = induced_sub(h, rem_vertices, rem_edges);
                if (!is_2connected(rem.h) || !is_sperner(rem.h)) continue;
                cands.push_back(BlockTriple{y, x, members, edge_idx});
            }
        }
        // (B5): three pairwise near-disjoint blocks.
        auto compatible = [&](const BlockTriple& p, const BlockTriple& q) {
            VertexSet mp = vector_to_set(p.members);
            VertexSet mq = vector_to_set(q.members);
            int inter = set_size(mp & mq);
            if (inter > 1) return false;
            if (inter == 1) return p.x == q.x && (mp & mq) == single(p.x);
            return p.x != q.x;
        };
        std::function<bool(size_t, std::vector<size_t>&)> pick = [&](size_t from,
                                                                     std::vector<size_t>& chosen) {
            if (chosen.size() == 3) return true;
            for (size_t i = from; i < cands.size(); ++i) {
                bool ok = true;
                for (size_t c : chosen)
                    if (!compatible(cands[c], cands[i])) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                chosen.push_back(i);
                if (pick(i + 1, chosen)) return true;
                chosen.pop_back();
            }
            return false;
        };
        std::vector<size_t> chosen;
        if (pick(0, chosen)) {
            rep.complete = true;
            for (size_t c : chosen) rep.triples.push_back(cands[c]);
            for (const BlockTriple& t : rep.triples) {
                SubHypergraph sub = induced_sub(h, t.members, t.edge_indices);
                int xi = -1, yi = -1;
                for (size_t i = 0; i < t.members.size(); ++i) {
                    if (t.members[i] == t.x) xi = static_cast<int>(i);
                    if (t.members[i] == t.y) yi = static_cast<int>(i);
                }
                if (longest_berge_xy_path(sub.h, xi, yi) >= k) ++rep.long_path_blocks;
            }
            return rep;
        }
        rep.notes.push_back("found " + std::to_string(cands.size()) +
                            " candidate blocks, no compatible triple");
        if (best.unhappy_edge == -1) best = rep;
    }
    return best;
}

StepOutcome shrink_step(const Hypergraph& h, int k) {
    StepOutcome out;
    std::vector<int> unhappy = unhappy_edges(h);
    if (unhappy.empty()) {
        out.status = StepOutcome::Status::AlreadyHappy;
        return out;
    }

    auto accept = [&](Accepted&& acc) {
        out.status = StepOutcome::Status::Applied;
        out.step = std::move(acc.step);
        out.next = std::move(acc.next);
        return true;
    };

    // (T1)
    for (int e : unhappy)
        for (int v : h.edge_vertices(e)) {
            ShrinkParams p{ShrinkKind::T1, h.edge_vertices(e), v, -1};
            if (auto acc = try_candidate(h, k, p, apply_T1(h, e, v)))
                if (accept(std::move(*acc))) return out;
        }
    // (T2)
    for (int v : special_vertices(h)) {
        ShrinkParams p{ShrinkKind::T2, {}, v, -1};
        if (auto acc = try_candidate(h, k, p, apply_T2(h, v)))
            if (accept(std::move(*acc))) return out;
    }
    // (T3)
    for (int e : special_edges(h)) {
        ShrinkParams p{ShrinkKind::T3, h.edge_vertices(e), -1, -1};
        if (auto acc = try_candidate(h, k, p, apply_T3(h, e)))
            if (accept(std::move(*acc))) return out;
    }
    // (T4)
    for (int e : unhappy)
        for (int keep : h.edge_vertices(e)) {
            ShrinkParams p{ShrinkKind::T4, h.edge_vertices(e), keep, -1};
            if (auto acc = try_candidate(h, k, p, apply_T4(h, e, keep)))
                if (accept(std::move(*acc))) return out;
        }
    // (T5)
    for (const TwoBlock& tb : special_two_blocks(h)) {
        ShrinkParams p{ShrinkKind::T5, tb.members, tb.outer_x, tb.outer_y};
        if (auto acc = try_candidate(h, k, p, apply_T5(h, tb), tb)) {
            out.status = StepOutcome::Status::Applied;
            out.step = std::move(acc->step);
            out.next = std::move(acc->next);
            out.blocks = std::nullopt;
            return out;
        }
    }

    BlockReport rep = block_report_search(h, k);
    out.status = rep.complete ? StepOutcome::Status::StuckWithBlocks
                              : StepOutcome::Status::StuckNoBlocks;
    out.blocks = std::move(rep);
    return out;
}

namespace {

bool thick_pairs_form_matching(const Hypergraph& h) {
    for (int e : unhappy_edges(h)) {
        std::vector<int> vs = h.edge_vertices(e);
        std::vector<VertexSet> thick;
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (codegree(h, vs[i], vs[j]) >= 2)
                    thick.push_back(with(single(vs[i]), vs[j]));
        for (size_t i = 0; i < thick.size(); ++i)
            for (size_t j = i + 1; j < thick.size(); ++j)
                if (thick[i] & thick[j]) return false;
    }
    return true;
}

bool all_pairs_thin(const Hypergraph& h) {
    for (int e : unhappy_edges(h)) {
        std::vector<int> vs = h.edge_vertices(e);
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (codegree(h, vs[i], vs[j]) >= 2) return false;
    }
    return true;
}

}  // namespace

ShrinkTrace reduce_to_happy(const Hypergraph& h, int k) {
    if (!is_sperner(h)) throw std::invalid_argument("reduce_to_happy needs a Sperner input");
    if (!is_2connected(h)) throw std::invalid_argument("reduce_to_happy needs 2-connectivity");
    if (circumference(h, k).length >= k)
        throw std::invalid_argument("reduce_to_happy needs circumference < k");

    ShrinkTrace tr;
    tr.initial = h;
    Hypergraph cur = h;
    bool used_t5 = false;
    std::optional<ShrinkKind> prev_kind;
    int t = (k - 1) / 2;
    while (true) {
        StepOutcome out = shrink_step(cur, k);
        if (out.status == StepOutcome::Status::AlreadyHappy) {
            tr.terminal = StepOutcome::Status::AlreadyHappy;
            break;
        }
        if (out.status != StepOutcome::Status::Applied) {
            tr.terminal = out.status;
            tr.blocks = out.blocks;
            break;
        }
        ShrinkKind kind = out.step->params.kind;
        if (prev_kind && *prev_kind != ShrinkKind::T1 && *prev_kind != ShrinkKind::T5 &&
            kind == ShrinkKind::T1) {
            tr.audit.ordering_ok = false;
            tr.audit.notes.push_back("T1 applied immediately after " + kind_name(*prev_kind));
        }
        if (kind != ShrinkKind::T1 && !thick_pairs_form_matching(cur)) {
            tr.audit.thick_matching_ok = false;
            tr.audit.notes.push_back("thick pairs not a matching before a non-T1 step");
        }
        if (kind != ShrinkKind::T1 && kind != ShrinkKind::T2 && !all_pairs_thin(cur)) {
            tr.audit.all_thin_ok = false;
            tr.audit.notes.push_back("thick pair survives before a non-T1/T2 step");
        }
        if (kind == ShrinkKind::T5) {
            used_t5 = true;
            // Density cap on the removed block, t = floor((k-1)/2).
            VertexSet members = vector_to_set(out.step->params.edge);
            VertexSet interior =
                members & ~with(single(out.step->params.v1), out.step->params.v2);
            int block_edges = 0;
            for (int e = 0; e < cur.edge_count(); ++e)
                if (subset_of(cur.edge(e), members) && (cur.edge(e) & interior)) ++block_edges;
            Count cap = binomial(t, std::min(cur.upper_rank() - 1, t / 2)) *
                        (set_size(members) - 2);
            if (Count(block_edges) > cap) {
                tr.audit.t5_block_cap_ok = false;
                tr.audit.notes.push_back("T5 block exceeds the density cap");
            }
        }
        tr.steps.push_back(*out.step);
        cur = std::move(*out.next);
        prev_kind = kind;
        if (static_cast<int>(tr.steps.size()) > tr.initial.sum_edge_sizes() +
                                                    tr.initial.vertex_count()) {
            tr.audit.notes.push_back("nontermination: potential did not bound the trace");
            tr.terminal = StepOutcome::Status::StuckNoBlocks;
            break;
        }
    }
    tr.final = cur;

    // Summed edge-drop cap over the whole run.
    Count cap_per_vertex = binomial(t, std::min(h.upper_rank() - 1, t / 2));
    Count allowed = cap_per_vertex * (h.vertex_count() - cur.vertex_count());
    if (Count(h.edge_count() - cur.edge_count()) > allowed) {
        tr.audit.cumulative_ok = false;
        tr.audit.notes.push_back("summed edge drop exceeds the cap");
    }
    if (tr.terminal == StepOutcome::Status::AlreadyHappy && !used_t5 &&
        h.vertex_count() >= k && cur.vertex_count() == k - 1) {
        Count cap = binomial(k - 2, std::min(h.upper_rank(), (k - 2) / 2)) + 2;
        if (Count(cur.edge_count()) > cap) {
            tr.audit.final_cap_ok = false;
            tr.audit.notes.push_back("k-1-vertex stop exceeds the edge cap");
        }
    }
    return tr;
}

Hypergraph replay_trace(const Hypergraph& initial, const std::vector<ShrinkStep>& steps) {
    Hypergraph cur = initial;
    for (const ShrinkStep& st : steps) {
        EditResult edit = apply_params(cur, st.params);
        auto compacted = compact_edit(cur, edit);
        if (!compacted) throw std::runtime_error("replay produced an invalid hypergraph");
        cur = std::move(compacted->h);
    }
    return cur;
}

namespace {

nlohmann::json metrics_json(const Metrics& m) {
    return nlohmann::json{{"vertices", m.vertices}, {"edges", m.edges}, {"size_sum", m.size_sum}};
}

Metrics metrics_from(const nlohmann::json& j) {
    return Metrics{j.at("vertices").get<int>(), j.at("edges").get<int>(),
                   j.at("size_sum").get<int>()};
}

ShrinkKind kind_from(const std::string& s) {
    if (s == "T1") return ShrinkKind::T1;
    if (s == "T2") return ShrinkKind::T2;
    if (s == "T3") return ShrinkKind::T3;
    if (s == "T4") return ShrinkKind::T4;
    if (s == "T5") return ShrinkKind::T5;
    throw std::invalid_argument("unknown step kind " + s);
}

const char* terminal_name(StepOutcome::Status s) {
    switch (s) {
        case StepOutcome::Status::AlreadyHappy: return "happy";
        case StepOutcome::Status::StuckWithBlocks: return "stuck-with-blocks";
        case StepOutcome::Status::StuckNoBlocks: return "stuck-no-blocks";
        default: return "applied";
    }
}

}  // namespace

std::string trace_to_json(const ShrinkTrace& t) {
    nlohmann::json j;
    j["initial"] = nlohmann::json::parse(to_json(t.initial));
    j["final"] = nlohmann::json::parse(to_json(t.final));
    j["terminal"] = terminal_name(t.terminal);
    j["steps"] = nlohmann::json::array();
    for (const ShrinkStep& st : t.steps) {
        nlohmann::json s;
        s["kind"] = kind_name(st.params.kind);
        s["edge"] = st.params.edge;
        s["v1"] = st.params.v1;
        s["v2"] = st.params.v2;
        s["before"] = metrics_json(st.before);
        s["after"] = metrics_json(st.after);
        j["steps"].push_back(std::move(s));
    }
    j["audit"] = nlohmann::json{{"cumulative_ok", t.audit.cumulative_ok},
                                {"ordering_ok", t.audit.ordering_ok},
                                {"thick_matching_ok", t.audit.thick_matching_ok},
                                {"all_thin_ok", t.audit.all_thin_ok},
                                {"final_cap_ok", t.audit.final_cap_ok},
                                {"t5_block_cap_ok", t.audit.t5_block_cap_ok},
                                {"notes", t.audit.notes}};
    if (t.blocks) {
        nlohmann::json br;
        br["unhappy_edge"] = t.blocks->unhappy_edge;
        br["complete"] = t.blocks->complete;
        br["long_path_blocks"] = t.blocks->long_path_blocks;
        br["triples"] = nlohmann::json::array();
        for (const BlockTriple& tri : t.blocks->triples)
            br["triples"].push_back(nlohmann::json{{"y", tri.y},
                                                   {"x", tri.x},
                                                   {"members", tri.members},
                                                   {"edge_indices", tri.edge_indices}});
        j["blocks"] = std::move(br);
    }
    return j.dump() + "\n";
}

ShrinkTrace trace_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ShrinkTrace t;
    t.initial = hypergraph_from_json(j.at("initial").dump());
    t.final = hypergraph_from_json(j.at("final").dump());
    std::string term = j.at("terminal").get<std::string>();
    if (term == "happy")
        t.terminal = StepOutcome::Status::AlreadyHappy;
    else if (term == "stuck-with-blocks")
        t.terminal = StepOutcome::Status::StuckWithBlocks;
    else
        t.terminal = StepOutcome::Status::StuckNoBlocks;
    for (const auto& s : j.at("steps")) {
        ShrinkStep st;
        st.params.kind = kind_from(s.at("kind").get<std::string>());
        st.params.edge = s.at("edge").get<std::vector<int>>();
        st.params.v1 = s.at("v1").get<int>();
        st.params.v2 = s.at("v2").get<int>();
        st.before = metrics_from(s.at("before"));
        st.after = metrics_from(s.at("after"));
        t.steps.push_back(std::move(st));
    }
    return t;
}

}  // namespace berge
