#ifndef COVHOLE_DETECTOR_HPP
#define COVHOLE_DETECTOR_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "covhole/boundary_cycle.hpp"
#include "covhole/deployment.hpp"
#include "covhole/simplicial.hpp"

namespace covhole {

/**
 * One node's simulated local knowledge.  Everything a node decides during
 * the detection stages is a pure function of this struct: 1-hop neighbours,
 * the neighbour lists of those neighbours (2-hop knowledge), and the
 * broadcast boundary statuses.  Positions never appear here.
 */
struct NodeView {
    int id = 0;
    bool is_fence = false;
    bool alive = true;
    std::vector<int> n1;                     // sorted neighbour ids
    std::map<int, std::vector<int>> n2;      // neighbour id -> its sorted neighbour list
    int weight = 0;                          // 0, 2 or 3
    std::vector<int> boundary_partners;      // neighbours across a boundary edge
    std::vector<int> boundary_node_neighbors;  // neighbours that declared boundary status
};

/** Common neighbours of v and its neighbour nb, from v's own view. */
std::vector<int> view_common_neighbors(const NodeView& view, int nb);

/** Neighbourhood graph Gamma(v): induced on n1 with adjacency from n2. */
SimplicialGraph view_neighborhood_graph(const NodeView& view);

/** Weight rule: fence 0; edge without common neighbour 0; bare triangle 2; else 3. */
int compute_weight(const NodeView& view);

/** Vertex HP-deletability: >= 2 neighbours, connected, simple-connected. */
bool hp_deletable_vertex(const NodeView& view);

/** Edge boundary rule: at most one common neighbour. */
bool view_edge_is_boundary(const NodeView& view, int nb);

struct DetectionReport {
    std::vector<BoundaryCycle> cycles;
    std::map<std::string, long> rounds;
    std::map<std::string, long> messages;
    RipsComplex residual;
    int betti1_initial = 0;
    int betti1_residual = 0;
    int failed_walks = 0;
};

/**
 * Deterministic synchronous round simulator for the detection stages.
 * Nodes act strictly on their NodeViews; the network object applies the
 * resulting mutations at round barriers, refreshes views (standing in for
 * the rebroadcasts) and counts rounds and messages per stage.
 */
class Network {
  public:
    static Network from_deployment(const Deployment& d);
    /** Test entry: explicit graph plus fence flags. */
    static Network from_graph(const std::vector<int>& vertices,
                              const std::vector<std::array<int, 2>>& edges,
                              const std::vector<int>& fence_ids);

    /** Two hello broadcasts: populates n1/n2, costs 2N messages. */
    void exchange_neighborhoods();

    void compute_weights();

    /** Synchronous rounds of weight-3 HP deletions; returns vertices removed. */
    long vertex_deletion_stage();

    /** Single-neighbour ("special") edge deletions guarded by a Hamilton check. */
    long edge_deletion_stage();

    /** Marks boundary edges, then deletes crossing/blocking edges to a fixpoint. */
    void boundary_edge_stage();

    std::vector<BoundaryCycle> coarse_cycle_stage();

    std::vector<BoundaryCycle> minimize_cycles(const std::vector<BoundaryCycle>& coarse) const;

    /** Flag complex over the residual graph. */
    RipsComplex residual_complex() const;

    const NodeView& view(int id) const;
    std::vector<int> alive_ids() const;
    bool edge_exists(int u, int v) const;
    bool is_connected() const;

    const std::map<std::string, long>& rounds() const { return rounds_; }
    const std::map<std::string, long>& messages() const { return messages_; }
    int failed_walks() const { return failed_walks_; }

    /** Verify betti1 before/after every single deletion (slow; tests). */
    void set_strict_homology_checks(bool on) { strict_checks_ = on; }
    void set_logger(std::function<void(const std::string&)> logger) { logger_ = std::move(logger); }

  private:
    NodeView& mut_view(int id);
    void remove_vertex(int id);
    void remove_edge(int u, int v);
    void refresh_n2();
    void remark_boundary();
    bool hp_deletable_edge(int u, int v) const;
    void check_homology(const std::function<void()>& mutation);
    void log(const std::string& msg) const;

    std::vector<NodeView> views_;
    std::map<int, int> index_;
    std::map<std::string, long> rounds_;
    std::map<std::string, long> messages_;
    int failed_walks_ = 0;
    bool strict_checks_ = false;
    std::function<void(const std::string&)> logger_;
};

/** The full pipeline on one deployment. */
DetectionReport run_hba(const Deployment& d);

/** Exhaustive Hamilton-cycle existence for small vertex sets (<= 12). */
bool hamilton_cycle_exists(const SimplicialGraph& g);

}  // namespace covhole

#endif
