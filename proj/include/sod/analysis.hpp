#pragma once

#include "sod/sphere.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <set>
#include <utility>
#include <vector>

namespace sod {

/// Travel state on the diagram: an arc together with a travel sense
/// (true = from u toward v).
using SwirlState = std::pair<std::size_t, bool>;

/// Cycle of arcs, each feeding into the next with a uniform turn sign.
/// orientation −1 is clockwise under the tangent_orient convention, +1
/// counterclockwise; only uniformity matters for the structure theorems.
struct Swirl {
    std::vector<SwirlState> cycle;
    int orientation;
    std::size_t eye_face;

    std::vector<std::size_t> arcs() const {
        std::vector<std::size_t> out;
        for (const auto& [a, fwd] : cycle) out.push_back(a);
        return out;
    }
};

namespace detail {

/// Follow the feed at the forward endpoint of `state`, turning with the
/// given sign onto the host arc.
inline SwirlState swirl_successor(const SOD& s, const SwirlState& state, int turn_sign) {
    auto [i, fwd] = state;
    int k = fwd ? 1 : 0;
    std::size_t b = s.host(i, k);
    const Vec3& q = s.map.endpoint(i, k).v;
    Vec3 w_in = s.map.arcs[i].forward_tangent(q);
    if (!fwd) w_in = -w_in;
    Vec3 tb = s.map.arcs[b].forward_tangent(q);
    int sg = tangent_orient(q, w_in, tb);
    if (sg == 0) throw std::logic_error("swirl walk: tangential feed (A3 violation)");
    return {b, sg == turn_sign};
}

/// The half-edge leaving the landing point of a feed along the host arc in
/// the given travel sense.
inline std::size_t landing_half_edge(const Arrangement& ar, const VisMap& m, const SwirlState& from,
                                     const SwirlState& onto) {
    const Vec3& q = m.endpoint(from.first, from.second ? 1 : 0).v;
    std::size_t node = ar.node_index(q);
    for (std::size_t h : ar.out_edges[node])
        if (ar.half_edges[h].arc == onto.first && ar.half_edges[h].forward == onto.second) return h;
    throw std::logic_error("swirl walk: landing half-edge not found");
}

}  // namespace detail

/// All swirls: the cycles of the uniform-turn successor map, for both turn
/// signs. Aborts if a cycle revisits an arc before closing (a case the
/// diagram axioms leave undefined).
inline std::vector<Swirl> find_swirls(const SOD& s, const Arrangement& ar) {
    std::vector<Swirl> out;
    for (int turn_sign : {+1, -1}) {
        std::set<SwirlState> in_cycle;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (bool fwd : {false, true}) {
                SwirlState start{i, fwd};
                if (in_cycle.count(start)) continue;
                // Walk the functional graph until a state repeats; keep only
                // the cycle part, and only when this start discovered it.
                std::vector<SwirlState> path{start};
                std::map<SwirlState, std::size_t> pos{{start, 0}};
                for (;;) {
                    SwirlState nxt = detail::swirl_successor(s, path.back(), turn_sign);
                    auto it = pos.find(nxt);
                    if (it != pos.end()) {
                        std::vector<SwirlState> cyc(path.begin() + it->second, path.end());
                        bool fresh = true;
                        for (const auto& st : cyc)
                            if (in_cycle.count(st)) fresh = false;
                        if (fresh) {
                            std::set<std::size_t> arcs_seen;
                            for (const auto& st : cyc)
                                if (!arcs_seen.insert(st.first).second)
                                    throw std::logic_error(
                                        "swirl walk: cycle revisits an arc before closing");
                            for (const auto& st : cyc) in_cycle.insert(st);
                            // A turn-sign +1 cycle (always left) encloses the
                            // face on the travel's left; −1 the one on the
                            // right (i.e. the left of the twin half-edge).
                            std::optional<std::size_t> eye;
                            for (std::size_t t = 0; t < cyc.size(); ++t) {
                                const SwirlState& from = cyc[t];
                                const SwirlState& onto = cyc[(t + 1) % cyc.size()];
                                std::size_t h = detail::landing_half_edge(ar, s.map, from, onto);
                                std::size_t f = turn_sign > 0
                                                    ? ar.half_edges[h].face
                                                    : ar.half_edges[ar.half_edges[h].twin].face;
                                if (eye && *eye != f)
                                    throw std::logic_error("swirl walk: eye face is ambiguous");
                                eye = f;
                            }
                            out.push_back({std::move(cyc), turn_sign, *eye});
                        }
                        break;
                    }
                    pos.emplace(nxt, path.size());
                    path.push_back(nxt);
                }
            }
    }
    return out;
}

inline std::vector<Swirl> find_swirls(const SOD& s) {
    Arrangement ar = build_arrangement(s.map);
    return find_swirls(s, ar);
}

struct SwirlGraph {
    std::size_t n_cw = 0, n_ccw = 0;
    // Undirected edges (swirl index, swirl index, shared arc), i < j.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> edges;

    std::size_t order() const { return n_cw + n_ccw; }
};

/// One vertex per swirl, one edge per arc shared by two swirls. Verifies
/// simplicity, bipartiteness between turn orientations with both parts
/// nonempty, and the bipartite-planar Euler bound; violations abort.
inline SwirlGraph swirl_graph(const std::vector<Swirl>& swirls) {
    SwirlGraph g;
    for (const auto& w : swirls) (w.orientation < 0 ? g.n_cw : g.n_ccw)++;
    if (g.n_cw == 0 || g.n_ccw == 0)
        throw std::logic_error("swirl graph: an orientation class is empty");
    std::map<std::size_t, std::vector<std::size_t>> arc_owners;
    for (std::size_t i = 0; i < swirls.size(); ++i)
        for (std::size_t a : swirls[i].arcs()) arc_owners[a].push_back(i);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [arc, owners] : arc_owners) {
        if (owners.size() > 2) throw std::logic_error("swirl graph: arc in three swirls");
        if (owners.size() == 2) {
            std::size_t i = std::min(owners[0], owners[1]);
            std::size_t j = std::max(owners[0], owners[1]);
            if (i == j) throw std::logic_error("swirl graph: loop");
            if (swirls[i].orientation == swirls[j].orientation)
                throw std::logic_error("swirl graph: edge within an orientation class");
            if (!seen.insert({i, j}).second)
                throw std::logic_error("swirl graph: multi-edge (two shared arcs)");
            g.edges.emplace_back(i, j, arc);
        }
    }
    if (swirls.size() >= 3 && g.edges.size() > 2 * swirls.size() - 4)
        throw std::logic_error("swirl graph: bipartite-planar Euler bound violated");
    return g;
}

struct ContactGraph {
    // directed: feeds[i] = the two hosts of arc i.
    std::vector<std::array<std::size_t, 2>> feeds;
};

/// The feeds-into digraph. Out-degree 2 everywhere; a 2-cycle would
/// contradict the structure theorems and aborts.
inline ContactGraph contact_graph(const SOD& s) {
    ContactGraph g;
    for (std::size_t i = 0; i < s.size(); ++i) g.feeds.push_back({s.host(i, 0), s.host(i, 1)});
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t b : g.feeds[i])
            for (std::size_t c : g.feeds[b])
                if (c == i) throw std::logic_error("contact graph: two arcs feed into each other");
    return g;
}

/// Open hemisphere {d : d . pole > 0}.
struct Hemisphere {
    Dir3 pole;
};

/// Exact check that a face lies inside the open hemisphere: all boundary
/// breakpoint directions strictly inside. Sufficient because every boundary
/// sub-arc is the positive span of its endpoints and faces are spherically
/// convex.
inline bool face_in_hemisphere(const Arrangement& ar, std::size_t face, const Hemisphere& h) {
    bool any = false;
    for (const auto& he : ar.half_edges)
        if (he.face == face) {
            any = true;
            if (dot(ar.node_dir[he.from], h.pole.v) <= 0) return false;
        }
    return any;
}

/// Lemma-style two-walk search for a swirl whose eye lies in h.
/// First walk: hop endpoint-to-host while staying inside h until an arc
/// repeats. Second walk: uniform-turn cycles through the repeated arc, both
/// turn signs, keeping one whose eye verifies. Falls back to scanning all
/// swirls; absence of any verified swirl contradicts the lemma and aborts.
inline Swirl swirl_in_hemisphere(const SOD& s, const Hemisphere& h) {
    Arrangement ar = build_arrangement(s.map);
    std::vector<Swirl> swirls = find_swirls(s, ar);
    auto verified = [&](const Swirl& w) { return face_in_hemisphere(ar, w.eye_face, h); };

    auto in_h = [&](const Vec3& d) { return dot(d, h.pole.v) > 0; };
    std::vector<std::size_t> candidates;
    for (std::size_t start = 0; start < s.size() && candidates.empty(); ++start) {
        int k0 = -1;
        for (int k = 0; k < 2; ++k)
            if (in_h(s.map.endpoint(start, k).v)) k0 = k;
        if (k0 < 0) continue;
        std::set<std::size_t> visited;
        std::size_t arc = start;
        int k = k0;
        while (visited.insert(arc).second) {
            std::size_t b = s.host(arc, k);
            int kb = -1;
            for (int kk = 0; kk < 2; ++kk)
                if (in_h(s.map.endpoint(b, kk).v)) kb = kk;
            if (kb < 0) break;  // walk left the hemisphere; try another start
            arc = b;
            k = kb;
        }
        if (visited.count(arc)) candidates.push_back(arc);  // enclosed a region
    }
    for (std::size_t arc : candidates)
        for (const auto& w : swirls) {
            auto as = w.arcs();
            if (std::find(as.begin(), as.end(), arc) != as.end() && verified(w)) return w;
        }
    for (const auto& w : swirls)  // exhaustive fallback
        if (verified(w)) return w;
    throw std::logic_error("no swirl eye inside the hemisphere");
}

// ---------------------------------------------------------------------------
// Semicircle covers.

using SemicircleCover = std::vector<GreatSemicircle>;

/// One great semicircle per distinct source edge: the projection of the
/// edge's full supporting line, whose relative interior contains every arc
/// the edge contributes.
inline SemicircleCover induced_cover(const World& world, const Point3& p, const SOD& s) {
    SemicircleCover cover;
    std::set<std::string> done;
    for (const auto& a : s.map.arcs) {
        if (!done.insert(a.source_edge).second) continue;
        const EdgeRec* e = world.find_edge(a.source_edge);
        if (!e) throw std::invalid_argument("induced_cover: unknown source edge " + a.source_edge);
        Vec3 dir = e->b - e->a;
        Vec3 n = cross(e->a - p, dir);
        if (n.is_zero())
            throw std::logic_error("induced_cover: viewpoint on the edge's supporting line");
        Vec3 m = cross(n, dir);
        if (dot(m, e->a - p) < 0) m = -m;
        cover.emplace_back(Dir3(n), Dir3(m));
    }
    return cover;
}

/// Every arc contained in the relative interior of some cover semicircle?
inline bool check_cover(const SOD& s, const SemicircleCover& c) {
    for (const auto& a : s.map.arcs) {
        bool covered = false;
        for (const auto& sc : c)
            if (arc_in_semicircle_relint(a, sc)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

}  // namespace sod
