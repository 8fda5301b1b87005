#pragma once

#include <array>
#include <map>
#include <memory>
#include <sstream>

#include "core.hpp"
#include "mst.hpp"

namespace treekit {

// ---------------------------------------------------------------------------
// Two distinct edge weights: exact in polynomial time. Span the fewest large
// light-weight components that reach k vertices, trim the last one to hit k
// exactly, then join the pieces with heavy edges.
// ---------------------------------------------------------------------------

inline KTreeSolution two_weight_kmst(const WeightedGraph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) throw ArgumentError("two_weight_kmst: bad k");
    std::vector<double> ws;
    for (const Edge& e : g.edges()) ws.push_back(e.w);
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    if (ws.size() > 2) throw ArgumentError("two_weight_kmst: more than two distinct weights");
    if (ws.empty()) {
        if (k == 1) return make_solution(g, {0}, {}, "two-weight");
        throw InfeasibleError("two_weight_kmst: no edges and k > 1");
    }
    const double w1 = ws.front();
    const double w2 = ws.back();

    std::vector<Edge> light;
    for (const Edge& e : g.edges())
        if (e.w == w1) light.push_back(e);
    WeightedGraph g1(n, light);
    auto comps = g1.components();
    std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        return a.size() > b.size();
    });

    int r = 0;
    long long total = 0;
    while (total < k) total += static_cast<long long>(comps[r++].size());

    // Full components except the last, which gets a connected BFS prefix.
    std::vector<std::vector<int>> parts;
    std::vector<Edge> edges;
    for (int c = 0; c < r; ++c) {
        std::vector<int> keep = comps[c];
        int want = (c + 1 < r) ? static_cast<int>(keep.size())
                               : k - static_cast<int>(total - comps[c].size());
        if (want < static_cast<int>(keep.size())) {
            std::vector<int> prefix;
            std::vector<char> seen(n, 0);
            std::vector<int> queue{keep.front()};
            seen[keep.front()] = 1;
            std::vector<Edge> bfs_edges;
            for (size_t qi = 0; qi < queue.size() && static_cast<int>(prefix.size()) < want; ++qi) {
                int v = queue[qi];
                prefix.push_back(v);
                if (static_cast<int>(prefix.size()) == want) break;
                for (int ei : g1.incident(v)) {
                    int u = g1.other_end(ei, v);
                    if (!seen[u]) {
                        seen[u] = 1;
                        queue.push_back(u);
                    }
                }
            }
            // BFS tree restricted to the prefix.
            std::sort(prefix.begin(), prefix.end());
            WeightedGraph sub = g1.induced(prefix);
            for (const Edge& e : mst_edges(sub))
                bfs_edges.emplace_back(prefix[e.u], prefix[e.v], e.w);
            edges.insert(edges.end(), bfs_edges.begin(), bfs_edges.end());
            parts.push_back(prefix);
        } else {
            WeightedGraph sub = g1.induced(keep);
            for (const Edge& e : mst_edges(sub)) edges.emplace_back(keep[e.u], keep[e.v], e.w);
            parts.push_back(keep);
        }
    }

    // Join the r parts with exactly r-1 heavy edges.
    std::vector<int> part_of(n, -1);
    for (int p = 0; p < r; ++p)
        for (int v : parts[p]) part_of[v] = p;
    std::map<std::pair<int, int>, Edge> cross_best;
    for (const Edge& e : g.edges()) {
        int a = part_of[e.u], b = part_of[e.v];
        if (a < 0 || b < 0 || a == b) continue;
        if (a > b) std::swap(a, b);
        auto it = cross_best.find({a, b});
        if (it == cross_best.end() || e < it->second) cross_best[{a, b}] = e;
    }
    UnionFind uf(r);
    int joined = 0;
    for (auto& [ab, e] : cross_best)
        if (uf.unite(ab.first, ab.second)) {
            edges.push_back(e);
            ++joined;
        }
    if (joined != r - 1)
        throw ApplicabilityError(
            "two_weight_kmst: the chosen light components cannot be joined by r-1 edges; "
            "run on the metric closure instead");

    std::vector<int> vertices;
    for (auto& p : parts) vertices.insert(vertices.end(), p.begin(), p.end());
    KTreeSolution sol = make_solution(g, std::move(vertices), std::move(edges), "two-weight");
    double expect = (k - r) * w1 + (r - 1) * w2;
    if (!approx_eq(sol.cost, expect))
        throw ValidationError("two_weight_kmst: cost formula violated");
    return sol;
}

// ---------------------------------------------------------------------------
// Series-parallel parse trees and the forest-cost table DP.
// ---------------------------------------------------------------------------

struct SPParseTree {
    enum class Kind { edge, series, parallel };
    Kind kind = Kind::edge;
    int u = -1, v = -1;
    double w = 0.0;
    std::unique_ptr<SPParseTree> left, right;
    // Ordered terminal pair of the composed graph, filled by validate().
    int t1 = -1, t2 = -1;

    static std::unique_ptr<SPParseTree> make_edge(int u, int v, double w) {
        auto n = std::make_unique<SPParseTree>();
        n->kind = Kind::edge;
        n->u = u;
        n->v = v;
        n->w = w;
        return n;
    }
    static std::unique_ptr<SPParseTree> make(Kind k, std::unique_ptr<SPParseTree> l,
                                             std::unique_ptr<SPParseTree> r) {
        auto n = std::make_unique<SPParseTree>();
        n->kind = k;
        n->left = std::move(l);
        n->right = std::move(r);
        return n;
    }
};

namespace sp_detail {

inline std::vector<int> validate(SPParseTree& node, std::vector<Edge>& edges) {
    if (node.kind == SPParseTree::Kind::edge) {
        if (node.u < 0 || node.v < 0) throw ValidationError("sp: negative vertex id");
        if (node.u == node.v) throw ValidationError("sp: self-loop");
        if (!(node.w >= 0.0) || !std::isfinite(node.w))
            throw ValidationError("sp: edge weight must be finite and nonnegative");
        node.t1 = node.u;
        node.t2 = node.v;
        edges.emplace_back(node.u, node.v, node.w);
        return {std::min(node.u, node.v), std::max(node.u, node.v)};
    }
    auto lv = validate(*node.left, edges);
    auto rv = validate(*node.right, edges);
    std::vector<int> shared;
    std::set_intersection(lv.begin(), lv.end(), rv.begin(), rv.end(), std::back_inserter(shared));
    if (node.kind == SPParseTree::Kind::series) {
        if (node.left->t2 != node.right->t1)
            throw ValidationError("sp: series requires left.t2 == right.t1");
        if (shared != std::vector<int>{node.left->t2})
            throw ValidationError("sp: series children may share only the identified terminal");
        node.t1 = node.left->t1;
        node.t2 = node.right->t2;
    } else {
        if (node.left->t1 != node.right->t1 || node.left->t2 != node.right->t2)
            throw ValidationError("sp: parallel requires matching terminal pairs");
        std::vector<int> want{std::min(node.left->t1, node.left->t2),
                              std::max(node.left->t1, node.left->t2)};
        if (shared != want)
            throw ValidationError("sp: parallel children may share only the two terminals");
        node.t1 = node.left->t1;
        node.t2 = node.left->t2;
    }
    std::vector<int> all;
    std::set_union(lv.begin(), lv.end(), rv.begin(), rv.end(), std::back_inserter(all));
    return all;
}

}  // namespace sp_detail

// Validates terminal identifications and simplicity; returns the composed
// graph's edges (raw vertex ids).
inline std::vector<Edge> sp_validate(SPParseTree& root) {
    std::vector<Edge> edges;
    sp_detail::validate(root, edges);
    std::sort(edges.begin(), edges.end());
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i].u == edges[i + 1].u && edges[i].v == edges[i + 1].v)
            throw ValidationError("sp: composition creates parallel edges");
    return edges;
}

// Forest states tracked per node: a single tree holding t1, holding t2,
// holding both, two trees splitting them, or one tree avoiding both.
enum SPState : int { sp_t1 = 0, sp_t2 = 1, sp_both = 2, sp_split = 3, sp_free = 4 };

struct CostEntry {
    double cost = kInf;
    int8_t case_id = -1;  // contributor index; -1 = none
    int16_t split = 0;    // left edge count when both children contribute
};

struct CostTable {
    int k = 0;
    std::array<std::vector<CostEntry>, 5> at;  // at[state][i], i in [1, k-1]

    explicit CostTable(int k_) : k(k_) {
        for (auto& v : at) v.assign(k, CostEntry{});
    }
    double cost(int state, int i) const {
        return (i >= 1 && i < k) ? at[state][i].cost : kInf;
    }
};

struct SPContributor {
    int lp = -1;  // left child state, -1 when the left side is empty
    int rp = -1;
};

inline const std::vector<SPContributor>& sp_contributors(bool series, int target) {
    // Series composes (a,m) with (m,b); parallel identifies both terminals.
    // Joining happens only at identified terminals; a combination is listed
    // exactly when the merged forest matches the target partition with no
    // stray terminal-free tree (and, for parallel both-both, no cycle).
    static const std::array<std::vector<SPContributor>, 5> series_tab = {{
        /*sp_t1*/ {{sp_t1, -1}, {sp_both, -1}, {sp_both, sp_t1}},
        /*sp_t2*/ {{-1, sp_t2}, {-1, sp_both}, {sp_t2, sp_both}},
        /*sp_both*/ {{sp_both, sp_both}},
        /*sp_split*/
        {{sp_t1, sp_t2}, {sp_both, sp_t2}, {sp_t1, sp_both}, {sp_split, sp_both}, {sp_both, sp_split}},
        /*sp_free*/ {{sp_t2, -1}, {sp_free, -1}, {-1, sp_t1}, {-1, sp_free}, {sp_t2, sp_t1}},
    }};
    static const std::array<std::vector<SPContributor>, 5> parallel_tab = {{
        /*sp_t1*/ {{sp_t1, -1}, {-1, sp_t1}, {sp_t1, sp_t1}},
        /*sp_t2*/ {{sp_t2, -1}, {-1, sp_t2}, {sp_t2, sp_t2}},
        /*sp_both*/
        {{sp_both, -1},
         {-1, sp_both},
         {sp_both, sp_t1},
         {sp_both, sp_t2},
         {sp_t1, sp_both},
         {sp_t2, sp_both},
         {sp_both, sp_split},
         {sp_split, sp_both}},
        /*sp_split*/
        {{sp_split, -1},
         {-1, sp_split},
         {sp_t1, sp_t2},
         {sp_t2, sp_t1},
         {sp_split, sp_t1},
         {sp_split, sp_t2},
         {sp_t1, sp_split},
         {sp_t2, sp_split},
         {sp_split, sp_split}},
        /*sp_free*/ {{sp_free, -1}, {-1, sp_free}},
    }};
    return series ? series_tab[target] : parallel_tab[target];
}

inline CostTable sp_edge_table(double w, int k) {
    CostTable t(k);
    if (k >= 2) t.at[sp_both][1] = {w, -1, 0};
    return t;
}

// Cost_i composition: identification rules add no edges, so edge counts add
// directly and the table entry is the minimum over all listed contributors.
inline CostTable compose_tables(const CostTable& left, const CostTable& right, bool series, int k) {
    CostTable out(k);
    for (int target = 0; target < 5; ++target) {
        const auto& cs = sp_contributors(series, target);
        for (int i = 1; i < k; ++i) {
            CostEntry best;
            for (int c = 0; c < static_cast<int>(cs.size()); ++c) {
                const auto& [lp, rp] = cs[c];
                if (lp >= 0 && rp >= 0) {
                    for (int t = 1; t < i; ++t) {
                        double a = left.cost(lp, t), b = right.cost(rp, i - t);
                        if (std::isinf(a) || std::isinf(b)) continue;
                        if (a + b < best.cost) best = {a + b, static_cast<int8_t>(c),
                                                       static_cast<int16_t>(t)};
                    }
                } else {
                    double x = lp >= 0 ? left.cost(lp, i) : right.cost(rp, i);
                    if (x < best.cost) best = {x, static_cast<int8_t>(c), 0};
                }
            }
            out.at[target][i] = best;
        }
    }
    return out;
}

namespace sp_detail {

struct TableSet {
    const SPParseTree* node;
    CostTable table;
};

inline void build_tables(const SPParseTree& node, int k, std::map<const SPParseTree*, CostTable>& out) {
    if (node.kind == SPParseTree::Kind::edge) {
        out.emplace(&node, sp_edge_table(node.w, k));
        return;
    }
    build_tables(*node.left, k, out);
    build_tables(*node.right, k, out);
    out.emplace(&node, compose_tables(out.at(node.left.get()), out.at(node.right.get()),
                                      node.kind == SPParseTree::Kind::series, k));
}

inline void reconstruct(const SPParseTree& node, const std::map<const SPParseTree*, CostTable>& tabs,
                        int state, int i, std::vector<Edge>& out) {
    if (node.kind == SPParseTree::Kind::edge) {
        out.emplace_back(node.u, node.v, node.w);
        return;
    }
    const CostEntry& e = tabs.at(&node).at[state][i];
    if (e.case_id < 0) throw ValidationError("sp: reconstructing an infeasible entry");
    const auto& c = sp_contributors(node.kind == SPParseTree::Kind::series, state)[e.case_id];
    if (c.lp >= 0 && c.rp >= 0) {
        reconstruct(*node.left, tabs, c.lp, e.split, out);
        reconstruct(*node.right, tabs, c.rp, i - e.split, out);
    } else if (c.lp >= 0) {
        reconstruct(*node.left, tabs, c.lp, i, out);
    } else {
        reconstruct(*node.right, tabs, c.rp, i, out);
    }
}

}  // namespace sp_detail

// Reconstructs the witness forest behind a finite table entry (used directly
// by sp_kmst for the answer and by tests for realizability checks).
inline std::vector<Edge> sp_reconstruct(const SPParseTree& root,
                                        const std::map<const SPParseTree*, CostTable>& tabs,
                                        int state, int i) {
    std::vector<Edge> out;
    sp_detail::reconstruct(root, tabs, state, i, out);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::map<const SPParseTree*, CostTable> sp_tables(const SPParseTree& root, int k) {
    std::map<const SPParseTree*, CostTable> tabs;
    sp_detail::build_tables(root, k, tabs);
    return tabs;
}

// Exact kMST on the series-parallel graph described by the parse tree.
inline KTreeSolution sp_kmst(SPParseTree& root, int k) {
    std::vector<Edge> all_edges = sp_validate(root);
    std::vector<int> ids;
    for (const Edge& e : all_edges) {
        ids.push_back(e.u);
        ids.push_back(e.v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const int n = static_cast<int>(ids.size());
    if (k < 2 || k > n) throw ArgumentError("sp_kmst: need 2 <= k <= vertex count");
    if (k - 1 > static_cast<int>(all_edges.size()))
        throw InfeasibleError("sp_kmst: not enough edges for a k-vertex tree");

    auto tabs = sp_tables(root, k);
    const CostTable& top = tabs.at(&root);
    int best_state = -1;
    double best = kInf;
    for (int state : {sp_t1, sp_t2, sp_both, sp_free}) {  // single-tree partitions only
        double c = top.cost(state, k - 1);
        if (c < best) {
            best = c;
            best_state = state;
        }
    }
    if (best_state < 0) throw InfeasibleError("sp_kmst: no k-vertex tree exists");

    std::vector<Edge> tree = sp_reconstruct(root, tabs, best_state, k - 1);
    std::vector<int> used;
    for (const Edge& e : tree) {
        used.push_back(e.u);
        used.push_back(e.v);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    // Validate against the composed graph (remapped to dense ids).
    std::vector<Edge> dense;
    auto local = [&](int raw) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), raw) - ids.begin());
    };
    for (const Edge& e : all_edges) dense.emplace_back(local(e.u), local(e.v), e.w);
    WeightedGraph composed(n, dense);
    std::vector<int> lv;
    std::vector<Edge> le;
    for (int v : used) lv.push_back(local(v));
    for (const Edge& e : tree) le.emplace_back(local(e.u), local(e.v), e.w);
    KTreeSolution checked = make_solution(composed, lv, le, "sp-dp");

    KTreeSolution out;
    out.vertices = used;
    out.edges = tree;
    out.cost = checked.cost;
    out.diameter = checked.diameter;
    out.solver_tag = "sp-dp";
    return out;
}

// Parses the s-expression forms (e u v w), (s T1 T2), (p T1 T2).
inline std::unique_ptr<SPParseTree> parse_sp_tree(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (ch == '(' || ch == ')') {
            if (!cur.empty()) {
                tokens.push_back(cur);
                cur.clear();
            }
            tokens.push_back(std::string(1, ch));
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) {
                tokens.push_back(cur);
                cur.clear();
            }
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);

    size_t pos = 0;
    std::function<std::unique_ptr<SPParseTree>()> parse = [&]() -> std::unique_ptr<SPParseTree> {
        if (pos >= tokens.size() || tokens[pos] != "(")
            throw ValidationError("sp parse: expected '('");
        ++pos;
        if (pos >= tokens.size()) throw ValidationError("sp parse: truncated input");
        std::string op = tokens[pos++];
        std::unique_ptr<SPParseTree> node;
        if (op == "e") {
            if (pos + 2 >= tokens.size()) throw ValidationError("sp parse: edge needs u v w");
            int u, v;
            double w;
            try {
                u = std::stoi(tokens[pos]);
                v = std::stoi(tokens[pos + 1]);
                w = std::stod(tokens[pos + 2]);
            } catch (const std::exception&) {
                throw ValidationError("sp parse: bad edge literal");
            }
            pos += 3;
            node = SPParseTree::make_edge(u, v, w);
        } else if (op == "s" || op == "p") {
            auto l = parse();
            auto r = parse();
            node = SPParseTree::make(op == "s" ? SPParseTree::Kind::series
                                               : SPParseTree::Kind::parallel,
                                     std::move(l), std::move(r));
        } else {
            throw ValidationError("sp parse: unknown operator '" + op + "'");
        }
        if (pos >= tokens.size() || tokens[pos] != ")")
            throw ValidationError("sp parse: expected ')'");
        ++pos;
        return node;
    };
    auto root = parse();
    if (pos != tokens.size()) throw ValidationError("sp parse: trailing tokens");
    return root;
}

// ---------------------------------------------------------------------------
// Exact kMST on trees: rooted knapsack DP over children.
// ---------------------------------------------------------------------------

inline KTreeSolution tree_kmst(const WeightedGraph& g, int k) {
    const int n = g.vertex_count();
    if (n == 0) throw ArgumentError("tree_kmst: empty graph");
    if (g.edge_count() != n - 1 || !g.connected())
        throw ArgumentError("tree_kmst: input graph is not a tree");
    if (k < 1 || k > n) throw ArgumentError("tree_kmst: bad k");
    if (k == 1) return make_solution(g, {0}, {}, "tree-dp");

    std::vector<int> parent(n, -1), order;
    {
        std::vector<int> stack{0};
        std::vector<char> seen(n, 0);
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int ei : g.incident(v)) {
                int u = g.other_end(ei, v);
                if (!seen[u]) {
                    seen[u] = 1;
                    parent[u] = v;
                    stack.push_back(u);
                }
            }
        }
    }
    std::vector<std::vector<int>> children(n);
    for (int v = 0; v < n; ++v)
        if (parent[v] >= 0) children[parent[v]].push_back(v);
    for (auto& c : children) std::sort(c.begin(), c.end());

    // dp[v][j]: cheapest connected j-vertex subgraph inside v's subtree that
    // contains v as its topmost vertex. choice[v][ci][j]: vertices taken from
    // the ci-th child (0 = child skipped).
    std::vector<std::vector<double>> dp(n);
    std::vector<std::vector<std::vector<int>>> choice(n);
    for (int idx = n - 1; idx >= 0; --idx) {
        int v = order[idx];
        dp[v].assign(k + 1, kInf);
        dp[v][1] = 0.0;
        choice[v].assign(children[v].size(), std::vector<int>(k + 1, 0));
        for (size_t ci = 0; ci < children[v].size(); ++ci) {
            int c = children[v][ci];
            double w = *g.weight_between(v, c);
            std::vector<double> next(k + 1, kInf);
            std::vector<int> pick(k + 1, 0);
            for (int j = 1; j <= k; ++j) {
                next[j] = dp[v][j];
                for (int t = 1; t < j; ++t) {
                    if (std::isinf(dp[v][j - t]) || std::isinf(dp[c][t])) continue;
                    double cand = dp[v][j - t] + dp[c][t] + w;
                    if (cand < next[j]) {
                        next[j] = cand;
                        pick[j] = t;
                    }
                }
            }
            dp[v] = std::move(next);
            choice[v][ci] = std::move(pick);
        }
    }

    int best_v = -1;
    for (int v = 0; v < n; ++v)
        if (best_v < 0 || dp[v][k] < dp[best_v][k]) best_v = v;
    if (std::isinf(dp[best_v][k])) throw InfeasibleError("tree_kmst: no k-vertex subtree");

    std::vector<Edge> edges;
    std::function<void(int, int)> rebuild = [&](int v, int j) {
        for (int ci = static_cast<int>(children[v].size()) - 1; ci >= 0; --ci) {
            int t = choice[v][ci][j];
            if (t > 0) {
                int c = children[v][ci];
                edges.emplace_back(v, c, *g.weight_between(v, c));
                rebuild(c, t);
                j -= t;
            }
        }
    };
    rebuild(best_v, k);
    std::vector<int> vs;
    for (const Edge& e : edges) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return make_solution(g, std::move(vs), std::move(edges), "tree-dp");
}

}  // namespace treekit
