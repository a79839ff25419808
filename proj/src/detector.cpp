#include "covhole/detector.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <stdexcept>
#include <tuple>

namespace covhole {

namespace {

std::vector<int> sorted_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool sorted_contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

std::vector<int> view_common_neighbors(const NodeView& view, int nb) {
    auto it = view.n2.find(nb);
    if (it == view.n2.end()) throw std::invalid_argument("not a neighbour of this node");
    return sorted_intersect(view.n1, it->second);
}

SimplicialGraph view_neighborhood_graph(const NodeView& view) {
    SimplicialGraph g;
    g.vertices = view.n1;
    for (int a : view.n1) {
        auto it = view.n2.find(a);
        if (it == view.n2.end()) continue;
        for (int b : it->second) {
            if (b > a && sorted_contains(view.n1, b)) g.edges.push_back({a, b});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

int compute_weight(const NodeView& view) {
    if (view.is_fence) return 0;
    for (int u : view.n1) {
        if (view_common_neighbors(view, u).empty()) return 0;
    }
    // every incident edge lies in a triangle; look for a triangle that is
    // not part of any tetrahedron
    for (int a : view.n1) {
        const auto& na = view.n2.at(a);
        for (int b : na) {
            if (b <= a || !sorted_contains(view.n1, b)) continue;
            auto common = sorted_intersect(view_common_neighbors(view, a), view.n2.at(b));
            if (common.empty()) return 2;
        }
    }
    return 3;
}

bool hp_deletable_vertex(const NodeView& view) {
    if (!view.alive || view.n1.size() < 2) return false;
    return is_simple_connectedness(view_neighborhood_graph(view));
}

bool view_edge_is_boundary(const NodeView& view, int nb) {
    return view_common_neighbors(view, nb).size() <= 1;
}

bool hamilton_cycle_exists(const SimplicialGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    if (n < 3) return false;
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[g.vertices[i]] = i;
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) {
        int u = pos.at(e[0]);
        int v = pos.at(e[1]);
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> used(n, false);
    used[0] = true;
    std::function<bool(int, int)> dfs = [&](int cur, int depth) {
        if (depth == n) return std::find(adj[cur].begin(), adj[cur].end(), 0) != adj[cur].end();
        for (int nxt : adj[cur]) {
            if (used[nxt]) continue;
            used[nxt] = true;
            if (dfs(nxt, depth + 1)) return true;
            used[nxt] = false;
        }
        return false;
    };
    return dfs(0, 1);
}

Network Network::from_graph(const std::vector<int>& vertices,
                            const std::vector<std::array<int, 2>>& edges,
                            const std::vector<int>& fence_ids) {
    Network net;
    std::vector<int> sorted_vertices = vertices;
    std::sort(sorted_vertices.begin(), sorted_vertices.end());
    std::set<int> fence(fence_ids.begin(), fence_ids.end());
    for (int id : sorted_vertices) {
        NodeView v;
        v.id = id;
        v.is_fence = fence.count(id) > 0;
        net.index_[id] = static_cast<int>(net.views_.size());
        net.views_.push_back(std::move(v));
    }
    for (const auto& e : edges) {
        net.mut_view(e[0]).n1.push_back(e[1]);
        net.mut_view(e[1]).n1.push_back(e[0]);
    }
    for (auto& v : net.views_) {
        std::sort(v.n1.begin(), v.n1.end());
        v.n1.erase(std::unique(v.n1.begin(), v.n1.end()), v.n1.end());
    }
    return net;
}

Network Network::from_deployment(const Deployment& d) {
    RipsComplex rips = build_rips(d);
    std::vector<int> fence;
    for (const auto& n : d.nodes) {
        if (n.is_fence) fence.push_back(n.id);
    }
    return from_graph(rips.vertices, rips.edges, fence);
}

NodeView& Network::mut_view(int id) { return views_[index_.at(id)]; }

const NodeView& Network::view(int id) const { return views_[index_.at(id)]; }

std::vector<int> Network::alive_ids() const {
    std::vector<int> ids;
    for (const auto& v : views_) {
        if (v.alive) ids.push_back(v.id);
    }
    return ids;
}

bool Network::edge_exists(int u, int v) const {
    auto it = index_.find(u);
    if (it == index_.end()) return false;
    const NodeView& view = views_[it->second];
    return view.alive && sorted_contains(view.n1, v);
}

bool Network::is_connected() const {
    std::vector<int> ids = alive_ids();
    if (ids.empty()) return true;
    std::set<int> seen{ids[0]};
    std::vector<int> stack{ids[0]};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int nb : view(cur).n1) {
            if (seen.insert(nb).second) stack.push_back(nb);
        }
    }
    return seen.size() == ids.size();
}

void Network::refresh_n2() {
    for (auto& v : views_) {
        if (!v.alive) continue;
        v.n2.clear();
        for (int nb : v.n1) v.n2[nb] = view(nb).n1;
    }
}

void Network::log(const std::string& msg) const {
    if (logger_) {
        logger_(msg);
    } else {
        std::cerr << "covhole: " << msg << "\n";
    }
}

void Network::check_homology(const std::function<void()>& mutation) {
    if (!strict_checks_) {
        mutation();
        return;
    }
    int before = betti(residual_complex()).betti1;
    mutation();
    int after = betti(residual_complex()).betti1;
    if (before != after) {
        throw std::logic_error("deletion changed betti1 from " + std::to_string(before) +
                               " to " + std::to_string(after));
    }
}

void Network::remove_vertex(int id) {
    check_homology([&] {
        NodeView& v = mut_view(id);
        for (int nb : v.n1) {
            auto& list = mut_view(nb).n1;
            list.erase(std::remove(list.begin(), list.end(), id), list.end());
        }
        messages_["vertex_deletion"] += 1 + static_cast<long>(v.n1.size());
        v.n1.clear();
        v.n2.clear();
        v.alive = false;
        v.boundary_partners.clear();
        v.boundary_node_neighbors.clear();
    });
}

void Network::remove_edge(int u, int v) {
    check_homology([&] {
        auto& lu = mut_view(u).n1;
        auto& lv = mut_view(v).n1;
        lu.erase(std::remove(lu.begin(), lu.end(), v), lu.end());
        lv.erase(std::remove(lv.begin(), lv.end(), u), lv.end());
    });
}

void Network::exchange_neighborhoods() {
    if (!is_connected()) {
        throw std::invalid_argument("network must form a single connected component");
    }
    refresh_n2();
    rounds_["exchange"] = 2;
    messages_["exchange"] = 2 * static_cast<long>(alive_ids().size());
}

void Network::compute_weights() {
    for (auto& v : views_) {
        if (v.alive) v.weight = compute_weight(v);
    }
}

long Network::vertex_deletion_stage() {
    long removed = 0;
    for (;;) {
        rounds_["vertex_deletion"] += 1;
        std::vector<int> ids = alive_ids();
        messages_["vertex_deletion"] += static_cast<long>(ids.size());  // status broadcasts

        std::set<int> deletable;
        for (int id : ids) {
            const NodeView& v = view(id);
            if (!v.is_fence && v.weight == 3 && hp_deletable_vertex(v)) deletable.insert(id);
        }
        std::vector<int> doomed;
        for (int id : deletable) {
            bool lowest = true;
            for (int nb : view(id).n1) {
                if (deletable.count(nb) && nb < id) {
                    lowest = false;
                    break;
                }
            }
            if (lowest) doomed.push_back(id);
        }
        if (doomed.empty()) break;
        for (int id : doomed) remove_vertex(id);
        removed += static_cast<long>(doomed.size());
        refresh_n2();
        compute_weights();
    }
    return removed;
}

long Network::edge_deletion_stage() {
    long removed = 0;
    rounds_["edge_deletion"] += 1;
    for (int id : alive_ids()) {
        const NodeView& v = view(id);
        if (!v.alive) continue;
        std::vector<int> specials;
        for (int nb : v.n1) {
            if (view_common_neighbors(v, nb).size() == 1) specials.push_back(nb);
        }
        if (specials.size() != 1) continue;
        int u = specials[0];

        // neighbourhood left after dropping the special edge
        SimplicialGraph left = view_neighborhood_graph(v);
        std::erase(left.vertices, u);
        std::erase_if(left.edges,
                      [&](const std::array<int, 2>& e) { return e[0] == u || e[1] == u; });
        if (left.vertices.size() > 12) {
            log("edge deletion skipped at node " + std::to_string(id) +
                ": neighbourhood too large for Hamilton search");
            continue;
        }
        if (!hamilton_cycle_exists(left)) continue;
        remove_edge(id, u);
        messages_["edge_deletion"] += 2;
        ++removed;
        refresh_n2();
        compute_weights();
    }
    return removed;
}

void Network::remark_boundary() {
    rounds_["boundary"] += 1;
    std::vector<int> ids = alive_ids();
    for (int id : ids) {
        NodeView& v = mut_view(id);
        v.boundary_partners.clear();
        for (int nb : v.n1) {
            if (view_edge_is_boundary(v, nb)) v.boundary_partners.push_back(nb);
        }
    }
    messages_["boundary"] += static_cast<long>(ids.size());  // status broadcasts
    for (int id : ids) {
        NodeView& v = mut_view(id);
        v.boundary_node_neighbors.clear();
        for (int nb : v.n1) {
            if (!view(nb).boundary_partners.empty()) v.boundary_node_neighbors.push_back(nb);
        }
    }
}

bool Network::hp_deletable_edge(int u, int v) const {
    const NodeView& uw = view(u);
    std::vector<int> common = view_common_neighbors(uw, v);
    SimplicialGraph g;
    g.vertices = common;
    g.vertices.push_back(u);
    g.vertices.push_back(v);
    std::sort(g.vertices.begin(), g.vertices.end());
    for (std::size_t i = 0; i < common.size(); ++i) {
        g.edges.push_back({std::min(u, common[i]), std::max(u, common[i])});
        g.edges.push_back({std::min(v, common[i]), std::max(v, common[i])});
        const auto& ni = uw.n2.at(common[i]);
        for (std::size_t j = i + 1; j < common.size(); ++j) {
            if (sorted_contains(ni, common[j])) {
                g.edges.push_back(
                    {std::min(common[i], common[j]), std::max(common[i], common[j])});
            }
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return is_simple_connectedness(g);
}

void Network::boundary_edge_stage() {
    remark_boundary();
    const int iteration_cap = 1000;
    for (int iter = 0; iter < iteration_cap; ++iter) {
        bool changed = false;

        // deletable edges joining non-boundary nodes to boundary nodes
        bool pass_changed = false;
        for (int id : alive_ids()) {
            const NodeView& v = view(id);
            if (!v.alive || !v.boundary_partners.empty()) continue;
            for (int nb : v.boundary_node_neighbors) {
                if (!edge_exists(id, nb)) continue;
                if (!hp_deletable_edge(id, nb)) continue;
                remove_edge(id, nb);
                messages_["boundary"] += 2;
                refresh_n2();
                pass_changed = true;
            }
        }
        if (pass_changed) {
            remark_boundary();
            changed = true;
        }

        // deletable non-boundary edges between two boundary nodes
        pass_changed = false;
        for (int id : alive_ids()) {
            const NodeView& v = view(id);
            if (!v.alive || v.boundary_partners.empty()) continue;
            for (int nb : v.boundary_node_neighbors) {
                if (nb < id) continue;  // ascending (u, v) order
                if (!edge_exists(id, nb)) continue;
                if (view_edge_is_boundary(view(id), nb)) continue;
                if (!hp_deletable_edge(id, nb)) continue;
                remove_edge(id, nb);
                messages_["boundary"] += 2;
                refresh_n2();
                pass_changed = true;
            }
        }
        if (pass_changed) {
            remark_boundary();
            changed = true;
        }

        // a boundary edge between two boundary neighbours of an internal
        // node falls when deleting it would free one of the node's own edges
        pass_changed = false;
        for (int id : alive_ids()) {
            const NodeView& v = view(id);
            if (!v.alive || v.is_fence) continue;
            const auto bn = v.boundary_node_neighbors;
            for (std::size_t i = 0; i < bn.size() && !pass_changed; ++i) {
                for (std::size_t j = i + 1; j < bn.size() && !pass_changed; ++j) {
                    int u = bn[i];
                    int w = bn[j];
                    if (!edge_exists(u, w)) continue;
                    if (view_edge_is_boundary(v, u) || view_edge_is_boundary(v, w)) continue;
                    auto common_uw = sorted_intersect(v.n2.at(u), v.n2.at(w));
                    if (common_uw.size() > 1) continue;  // (u, w) is not a boundary edge
                    auto cu = view_common_neighbors(v, u);
                    auto cw = view_common_neighbors(v, w);
                    std::erase(cu, w);
                    std::erase(cw, u);
                    if (cu.size() > 1 && cw.size() > 1) continue;  // deletion frees nothing
                    if (!hp_deletable_edge(u, w)) continue;
                    remove_edge(u, w);
                    messages_["boundary"] += 2;
                    refresh_n2();
                    remark_boundary();
                    pass_changed = true;
                }
            }
            if (pass_changed) break;
        }
        if (pass_changed) changed = true;

        // crossing patterns: an internal node whose boundary partners
        // already connect through non-boundary 2-paths sheds its own
        // boundary edges
        pass_changed = false;
        for (int id : alive_ids()) {
            const NodeView& v = view(id);
            if (!v.alive || v.is_fence || v.boundary_partners.size() < 2) continue;
            auto linked = [&](int a, int b) {
                for (int x : v.n1) {
                    if (x == a || x == b) continue;
                    const auto& nx = v.n2.at(x);
                    if (!sorted_contains(nx, a) || !sorted_contains(nx, b)) continue;
                    auto common_ax = sorted_intersect(v.n2.at(a), nx);
                    auto common_xb = sorted_intersect(nx, v.n2.at(b));
                    if (common_ax.size() > 1 && common_xb.size() > 1) return true;
                }
                return false;
            };
            const auto partners = v.boundary_partners;
            if (partners.size() == 2) {
                if (linked(partners[0], partners[1])) {
                    for (int p : partners) {
                        if (edge_exists(id, p) && hp_deletable_edge(id, p)) {
                            remove_edge(id, p);
                            messages_["boundary"] += 2;
                            refresh_n2();
                            pass_changed = true;
                        }
                    }
                }
            } else {
                for (std::size_t i = 0; i < partners.size() && !pass_changed; ++i) {
                    for (std::size_t j = i + 1; j < partners.size() && !pass_changed; ++j) {
                        if (!linked(partners[i], partners[j])) continue;
                        for (int cand : {partners[i], partners[j]}) {
                            if (edge_exists(id, cand) && hp_deletable_edge(id, cand)) {
                                remove_edge(id, cand);
                                messages_["boundary"] += 2;
                                refresh_n2();
                                pass_changed = true;
                                break;
                            }
                        }
                    }
                }
            }
            if (pass_changed) {
                remark_boundary();
                break;
            }
        }
        if (pass_changed) changed = true;

        if (!changed) break;
    }
}

namespace {

struct EdgeKey {
    int u, v;
    bool operator<(const EdgeKey& o) const { return std::tie(u, v) < std::tie(o.u, o.v); }
};

EdgeKey make_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

std::vector<BoundaryCycle> Network::coarse_cycle_stage() {
    std::vector<BoundaryCycle> cycles;
    std::set<EdgeKey> boundary_edges;
    for (int id : alive_ids()) {
        for (int nb : view(id).boundary_partners) boundary_edges.insert(make_edge(id, nb));
    }
    std::set<EdgeKey> claimed;
    auto is_boundary_node = [&](int id) { return !view(id).boundary_partners.empty(); };

    // The initiator floods a message out along its boundary edges; the first
    // time two different flood branches touch, the union of their tree paths
    // is the shortest simple boundary cycle through the initiator.  Messages
    // ride unclaimed boundary edges; where those run out they may detour
    // over a plain edge to a boundary node, or over two plain edges bridged
    // by a relay that still sees a boundary node.
    for (;;) {
        std::map<int, std::vector<int>> adj;  // unclaimed boundary edges
        for (const auto& e : boundary_edges) {
            if (claimed.count(e)) continue;
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        int initiator = -1;
        for (const auto& [id, nbs] : adj) {
            if (nbs.size() >= 2 && !view(id).is_fence) {
                initiator = id;
                break;
            }
        }
        if (initiator < 0) break;

        // allowed forwarding moves from `cur`; relay == arrived over a plain
        // edge at a non-boundary node, which must hand off to a boundary node
        auto moves_of = [&](int cur, bool relay) {
            const NodeView& v = view(cur);
            std::vector<int> out;
            auto push = [&](int nb) {
                if (std::find(out.begin(), out.end(), nb) == out.end()) out.push_back(nb);
            };
            if (relay) {
                for (int nb : v.n1) {
                    if (is_boundary_node(nb)) push(nb);
                }
                return out;
            }
            bool has_boundary_move = false;
            for (int nb : v.boundary_partners) {
                if (!claimed.count(make_edge(cur, nb))) {
                    push(nb);
                    has_boundary_move = true;
                }
            }
            if (!has_boundary_move) {
                for (int nb : v.n1) {
                    if (is_boundary_node(nb)) push(nb);
                }
                for (int nb : v.n1) {
                    if (!view(nb).boundary_node_neighbors.empty()) push(nb);
                }
            }
            return out;
        };

        long hops = 0;
        // restricted == boundary-edge flood with the two-hop detours;
        // unrestricted == plain flood over the residual graph, used when the
        // marking left a hole ring too gappy to trace (the ring itself
        // survives every stage, so a graph cycle through the initiator's
        // boundary edges still hugs the hole)
        auto flood = [&](bool restricted) {
            std::map<int, int> parent;
            std::map<int, int> branch;  // which initiator edge started the branch
            std::map<int, bool> relay_state;
            std::vector<int> frontier;
            for (int nb : adj.at(initiator)) {
                if (parent.count(nb)) continue;
                parent[nb] = initiator;
                branch[nb] = nb;
                relay_state[nb] = false;
                frontier.push_back(nb);
                ++hops;
            }
            std::sort(frontier.begin(), frontier.end());

            std::vector<int> cycle_path;
            while (!frontier.empty() && cycle_path.empty()) {
                std::vector<int> next_frontier;
                for (int cur : frontier) {
                    std::vector<int> moves =
                        restricted ? moves_of(cur, relay_state[cur])
                                   : std::vector<int>(view(cur).n1);
                    for (int nb : moves) {
                        if (nb == initiator || nb == parent[cur]) continue;
                        auto it = branch.find(nb);
                        if (it != branch.end()) {
                            if (it->second != branch[cur]) {
                                // two branches met: initiator..cur..nb..initiator
                                std::vector<int> left{cur};
                                for (int p = parent[cur]; p != initiator; p = parent[p]) {
                                    left.push_back(p);
                                }
                                std::vector<int> right{nb};
                                for (int p = parent[nb]; p != initiator; p = parent[p]) {
                                    right.push_back(p);
                                }
                                if (left.size() + right.size() + 1 < 4) continue;
                                cycle_path.push_back(initiator);
                                for (auto r = left.rbegin(); r != left.rend(); ++r) {
                                    cycle_path.push_back(*r);
                                }
                                cycle_path.insert(cycle_path.end(), right.begin(), right.end());
                                break;
                            }
                            continue;
                        }
                        bool via_boundary = boundary_edges.count(make_edge(cur, nb)) &&
                                            !claimed.count(make_edge(cur, nb));
                        parent[nb] = cur;
                        branch[nb] = branch[cur];
                        relay_state[nb] = !via_boundary && !is_boundary_node(nb);
                        next_frontier.push_back(nb);
                        ++hops;
                    }
                    if (!cycle_path.empty()) break;
                }
                std::sort(next_frontier.begin(), next_frontier.end());
                frontier = std::move(next_frontier);
            }
            return cycle_path;
        };

        std::vector<int> cycle_path = flood(true);
        if (cycle_path.empty()) cycle_path = flood(false);

        messages_["coarse_cycles"] += hops;
        rounds_["coarse_cycles"] += 1;

        if (!cycle_path.empty()) {
            for (std::size_t i = 0; i < cycle_path.size(); ++i) {
                EdgeKey e = make_edge(cycle_path[i], cycle_path[(i + 1) % cycle_path.size()]);
                if (boundary_edges.count(e)) claimed.insert(e);
            }
            BoundaryCycle cyc;
            cyc.vertices = std::move(cycle_path);
            cycles.push_back(std::move(cyc));
        } else {
            // retire this initiator's pending edges; other nodes of the
            // component still get their turn
            ++failed_walks_;
            log("coarse cycle flood found no cycle from initiator " + std::to_string(initiator));
            for (int nb : adj.at(initiator)) claimed.insert(make_edge(initiator, nb));
        }
    }
    return cycles;
}

std::vector<BoundaryCycle> Network::minimize_cycles(
    const std::vector<BoundaryCycle>& coarse) const {
    std::vector<BoundaryCycle> out;
    std::set<std::vector<int>> seen;

    for (const auto& input : coarse) {
        std::vector<int> cyc = input.vertices;
        bool changed = true;
        int guard = 100 * static_cast<int>(cyc.size()) + 100;
        while (changed && guard-- > 0) {
            changed = false;
            const int L = static_cast<int>(cyc.size());
            if (L <= 3) break;

            // Replace a sub-path by a chord or by a 2-path through a common
            // neighbour.  Every replacement must leave the loop formed by
            // the old and new paths fan-triangulated (verifiable from the
            // involved nodes' 2-hop views), so a cycle can tighten around
            // its hole but never jump across one.
            for (int span = 2; span < L - 1 && !changed; ++span) {
                for (int i = 0; i < L && !changed; ++i) {
                    int j = (i + span) % L;
                    int a = cyc[i];
                    int b = cyc[j];
                    std::vector<int> interior;
                    for (int k = (i + 1) % L; k != j; k = (k + 1) % L) interior.push_back(cyc[k]);
                    auto remainder = [&]() {
                        std::vector<int> rest;  // b ... a walking the kept arc
                        for (int k = j;; k = (k + 1) % L) {
                            rest.push_back(cyc[k]);
                            if (k == i) break;
                        }
                        return rest;
                    };
                    auto adjacent_to_all = [&](int x) {
                        const NodeView& vx = view(x);
                        for (int m : interior) {
                            if (!sorted_contains(vx.n1, m)) return false;
                        }
                        return true;
                    };
                    if (edge_exists(a, b)) {
                        // the dropped arc must fan onto one endpoint
                        if (span == 2 || adjacent_to_all(a) || adjacent_to_all(b)) {
                            std::vector<int> next = remainder();
                            if (static_cast<int>(next.size()) >= 3 &&
                                static_cast<int>(next.size()) < L) {
                                cyc = std::move(next);
                                changed = true;
                            }
                        }
                    } else if (span >= 3) {
                        const NodeView& va = view(a);
                        for (int x : va.n1) {
                            if (!sorted_contains(va.n2.at(x), b)) continue;
                            if (!adjacent_to_all(x)) continue;  // keeps the loop contractible
                            bool on_kept = false;
                            for (int k = j;; k = (k + 1) % L) {
                                if (cyc[k] == x) {
                                    on_kept = true;
                                    break;
                                }
                                if (k == i) break;
                            }
                            if (on_kept) continue;
                            std::vector<int> next = remainder();
                            next.push_back(x);  // close b ... a with a-x-b
                            if (static_cast<int>(next.size()) < L) {
                                cyc = std::move(next);
                                changed = true;
                            }
                            break;
                        }
                    }
                }
            }
            if (changed) continue;

            // 2-hop shrink: for consecutive a,b,c,d replace b,c by a common
            // neighbour x of all four
            for (int i = 0; i < L && !changed; ++i) {
                int a = cyc[i];
                int b = cyc[(i + 1) % L];
                int c = cyc[(i + 2) % L];
                int d = cyc[(i + 3) % L];
                const NodeView& vb = view(b);
                for (int x : vb.n1) {
                    if (x == a || x == c || x == d) continue;
                    const auto& nx = vb.n2.at(x);
                    if (!sorted_contains(nx, a) || !sorted_contains(nx, c) ||
                        !sorted_contains(nx, d)) {
                        continue;
                    }
                    if (std::find(cyc.begin(), cyc.end(), x) != cyc.end()) continue;
                    std::vector<int> next;
                    for (int k = (i + 3) % L;; k = (k + 1) % L) {
                        next.push_back(cyc[k]);  // d ... a
                        if (k == i) break;
                    }
                    next.push_back(x);  // close with a-x-d
                    cyc = std::move(next);
                    changed = true;
                    break;
                }
            }
        }

        if (static_cast<int>(cyc.size()) < 4) continue;  // 3-cycles bound no hole

        auto canonical = [](std::vector<int> c) {
            auto mn = std::min_element(c.begin(), c.end());
            std::rotate(c.begin(), mn, c.end());
            if (c.size() > 2 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
            return c;
        };
        if (seen.insert(canonical(cyc)).second) {
            BoundaryCycle bc;
            bc.vertices = std::move(cyc);
            out.push_back(std::move(bc));
        }
    }
    return out;
}

RipsComplex Network::residual_complex() const {
    SimplicialGraph g;
    for (const auto& v : views_) {
        if (!v.alive) continue;
        g.vertices.push_back(v.id);
        for (int nb : v.n1) {
            if (nb > v.id) g.edges.push_back({v.id, nb});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    RipsComplex rc;
    rc.vertices = g.vertices;
    rc.edges = g.edges;
    rc.triangles = flag_triangles(g);
    return rc;
}

DetectionReport run_hba(const Deployment& d) {
    Network net = Network::from_deployment(d);
    int initial = betti(net.residual_complex()).betti1;
    net.exchange_neighborhoods();
    net.compute_weights();
    net.vertex_deletion_stage();
    while (net.edge_deletion_stage() > 0) {
        net.vertex_deletion_stage();
    }
    net.boundary_edge_stage();
    auto coarse = net.coarse_cycle_stage();
    auto cycles = net.minimize_cycles(coarse);

    DetectionReport rep;
    rep.cycles = std::move(cycles);
    rep.rounds = net.rounds();
    rep.messages = net.messages();
    rep.residual = net.residual_complex();
    rep.betti1_initial = initial;
    rep.betti1_residual = betti(rep.residual).betti1;
    rep.failed_walks = net.failed_walks();
    return rep;
}

}  // namespace covhole
