#pragma once

#include "sod/rng.hpp"
#include "sod/visibility.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sod {

inline Dir3 project(const Point3& p, const Point3& q) {
    if (p == q) throw std::invalid_argument("project: q coincides with viewpoint");
    return Dir3(q - p);
}

/// Great-circle arc, strictly shorter than a semicircle: the set of
/// directions alpha*u + beta*v with alpha, beta >= 0, not both zero.
struct Arc {
    Dir3 u, v;
    Vec3 n;  // cross(u, v); orients the arc's circle, never zero
    std::string source_edge;
    Rat t_lo, t_hi;

    Arc(Dir3 u_, Dir3 v_, std::string src, Rat lo, Rat hi)
        : u(std::move(u_)), v(std::move(v_)), n(cross(u.v, v.v)),
          source_edge(std::move(src)), t_lo(std::move(lo)), t_hi(std::move(hi)) {
        if (n.is_zero())
            throw std::invalid_argument("Arc: endpoints dependent (not shorter than a semicircle)");
    }

    /// Coordinates of d in the (u, v) frame, up to one common positive factor.
    /// d lies on the arc's plane iff dot(d, n) == 0.
    Rat coord_alpha(const Vec3& d) const { return dot(cross(d, v.v), n); }
    Rat coord_beta(const Vec3& d) const { return dot(cross(u.v, d), n); }

    bool contains(const Vec3& d, bool strict) const {
        if (d.is_zero() || dot(d, n) != 0) return false;
        Rat a = coord_alpha(d), b = coord_beta(d);
        if (strict) return a > 0 && b > 0;
        if (a < 0 || b < 0) return false;
        if (a == 0) return dot(d, v.v) > 0;  // d parallel to an endpoint: positive side only
        if (b == 0) return dot(d, u.v) > 0;
        return true;
    }

    /// Tangent at an arc point q in the direction of travel from u toward v.
    Vec3 forward_tangent(const Vec3& q) const { return cross(n, q); }
};

/// Projection of everything p sees: one arc per positive-length visible
/// sub-segment, plus the endpoint-on-arc incidences.
struct VisMap {
    Point3 viewpoint;
    std::vector<Arc> arcs;
    // incidence[i][k]: index of the arc whose relative interior contains
    // endpoint k (0 = u, 1 = v) of arc i, if any.
    std::vector<std::array<std::optional<std::size_t>, 2>> incidence;

    const Dir3& endpoint(std::size_t arc_ix, int k) const {
        return k == 0 ? arcs[arc_ix].u : arcs[arc_ix].v;
    }
};

inline std::string arc_label(const VisMap& m, std::size_t i) {
    std::ostringstream os;
    os << "arc " << i << " (" << m.arcs[i].source_edge << " [" << rat_to_string(m.arcs[i].t_lo)
       << "," << rat_to_string(m.arcs[i].t_hi) << "])";
    return os.str();
}

namespace detail {

inline void compute_incidence(VisMap& m) {
    m.incidence.assign(m.arcs.size(), {std::nullopt, std::nullopt});
    for (std::size_t i = 0; i < m.arcs.size(); ++i) {
        for (int k = 0; k < 2; ++k) {
            const Vec3& q = m.endpoint(i, k).v;
            for (std::size_t j = 0; j < m.arcs.size(); ++j) {
                if (j == i) continue;
                if (m.arcs[j].contains(q, /*strict=*/true)) {
                    if (m.incidence[i][k])
                        throw std::logic_error("VisMap: endpoint of " + arc_label(m, i) +
                                               " interior to two arcs");
                    m.incidence[i][k] = j;
                }
            }
        }
    }
}

}  // namespace detail

inline VisMap build_vismap(const World& w, const Point3& p) {
    VisMap m;
    m.viewpoint = p;
    for (const auto& e : w.edges()) {
        VisibleSet vs = visible_subsegments(w, p, e);
        for (const auto& iv : vs.intervals) {
            if (iv.degenerate()) continue;
            Point3 x = e.a + (e.b - e.a) * iv.lo;
            Point3 y = e.a + (e.b - e.a) * iv.hi;
            m.arcs.emplace_back(project(p, x), project(p, y), e.id, iv.lo, iv.hi);
        }
    }
    detail::compute_incidence(m);
    return m;
}

/// det(q, a, b): orientation of b relative to a in the tangent plane at the
/// sphere point q, as seen from outside the sphere.
inline int tangent_orient(const Vec3& q, const Vec3& a, const Vec3& b) {
    return sign(dot(q, cross(a, b)));
}

/// A3 side sign: arc `a` ends at q in the relative interior of host `b`.
/// Sign of the side of b on which a locally lies.
inline int feed_side_sign(const VisMap& m, std::size_t a_ix, int endpoint_k, std::size_t b_ix) {
    const Arc& a = m.arcs[a_ix];
    const Arc& b = m.arcs[b_ix];
    const Vec3& q = m.endpoint(a_ix, endpoint_k).v;
    Vec3 tb = b.forward_tangent(q);
    Vec3 into_a = endpoint_k == 0 ? a.forward_tangent(q) : -a.forward_tangent(q);
    return tangent_orient(q, tb, into_a);
}

struct AxiomReport {
    bool a1 = true, a2 = true, a3 = true;
    std::vector<std::string> witnesses;
    bool pass() const { return a1 && a2 && a3; }
};

namespace detail {

/// Do the relative interiors of two arcs intersect?
inline bool arcs_internally_overlap(const Arc& A, const Arc& B) {
    Vec3 c = cross(A.n, B.n);
    if (c.is_zero()) {
        // Same great circle.
        if (A.contains(B.u.v, true) || A.contains(B.v.v, true) || B.contains(A.u.v, true) ||
            B.contains(A.v.v, true))
            return true;
        return (A.u == B.u && A.v == B.v) || (A.u == B.v && A.v == B.u);
    }
    return (A.contains(c, true) && B.contains(c, true)) ||
           (A.contains(-c, true) && B.contains(-c, true));
}

}  // namespace detail

inline AxiomReport check_axioms(const VisMap& m) {
    AxiomReport r;
    // A1': arcs shorter than a semicircle (guaranteed by construction of Arc)
    // and pairwise internally disjoint.
    for (std::size_t i = 0; i < m.arcs.size(); ++i)
        for (std::size_t j = i + 1; j < m.arcs.size(); ++j)
            if (detail::arcs_internally_overlap(m.arcs[i], m.arcs[j])) {
                r.a1 = false;
                r.witnesses.push_back("A1': interiors of " + arc_label(m, i) + " and " +
                                      arc_label(m, j) + " intersect");
            }
    // A1' proviso: a shared endpoint must lie in the interior of a third arc.
    for (std::size_t i = 0; i < m.arcs.size(); ++i)
        for (int k = 0; k < 2; ++k) {
            const Dir3& q = m.endpoint(i, k);
            bool shared = false;
            for (std::size_t j = 0; j < m.arcs.size() && !shared; ++j)
                if (j != i && (m.endpoint(j, 0) == q || m.endpoint(j, 1) == q)) shared = true;
            if (shared && !m.incidence[i][k]) {
                r.a1 = false;
                r.witnesses.push_back("A1': endpoint " + std::string(k ? "v" : "u") + " of " +
                                      arc_label(m, i) + " shared but hosted by no arc");
            }
        }
    // A2: every endpoint interior to some other arc.
    for (std::size_t i = 0; i < m.arcs.size(); ++i)
        for (int k = 0; k < 2; ++k)
            if (!m.incidence[i][k]) {
                r.a2 = false;
                r.witnesses.push_back("A2: endpoint " + std::string(k ? "v" : "u") + " of " +
                                      arc_label(m, i) + " not hosted");
            }
    // A3: uniform side sign per host arc.
    std::vector<int> side(m.arcs.size(), 0);
    for (std::size_t i = 0; i < m.arcs.size() && r.a2; ++i)
        for (int k = 0; k < 2; ++k) {
            std::size_t b = *m.incidence[i][k];
            int s = feed_side_sign(m, i, k, b);
            if (s == 0) {
                r.a3 = false;
                r.witnesses.push_back("A3: " + arc_label(m, i) + " tangent to its host " +
                                      arc_label(m, b));
            } else if (side[b] == 0) {
                side[b] = s;
            } else if (side[b] != s) {
                r.a3 = false;
                r.witnesses.push_back("A3: feeds into " + arc_label(m, b) +
                                      " arrive from both sides");
            }
        }
    return r;
}

/// A VisMap proven to satisfy the diagram axioms.
struct SOD {
    VisMap map;

    std::size_t size() const { return map.arcs.size(); }
    /// Host of endpoint k of arc i (A2 guarantees existence).
    std::size_t host(std::size_t i, int k) const { return *map.incidence[i][k]; }
};

struct SodResult {
    std::optional<SOD> sod;
    std::vector<std::string> visible_verts;  // nonempty on the failure outcome

    bool ok() const { return sod.has_value(); }
};

inline SOD upgrade_to_sod(VisMap m) {
    AxiomReport r = check_axioms(m);
    if (!r.pass()) {
        std::string msg = "arc set is not a SOD:";
        for (const auto& w : r.witnesses) msg += "\n  " + w;
        throw std::logic_error(msg);
    }
    return SOD{std::move(m)};
}

inline SodResult build_sod(const World& w, const Point3& p) {
    SodResult res;
    res.visible_verts = visible_vertices(w, p);
    if (!res.visible_verts.empty()) return res;
    // A vertex-free viewpoint must yield a SOD; an axiom failure here is an
    // engine bug, and upgrade_to_sod throws loudly.
    res.sod = upgrade_to_sod(build_vismap(w, p));
    return res;
}

// ---------------------------------------------------------------------------
// Spherical arrangement of the arcs as a half-edge structure.

struct HalfEdge {
    std::size_t arc;
    std::size_t from, to;  // node indices
    bool forward;          // travels in the arc's u -> v sense
    std::size_t twin, next, face;
};

struct SphereFace {
    std::size_t id;
    // Boundary walk with the face on the left: (arc index, forward?) per
    // traversed sub-arc.
    std::vector<std::pair<std::size_t, bool>> boundary;
};

struct Arrangement {
    std::vector<Vec3> node_dir;
    std::vector<HalfEdge> half_edges;
    std::vector<SphereFace> faces;
    // out_edges[n]: half-edges leaving node n, sorted counterclockwise.
    std::vector<std::vector<std::size_t>> out_edges;

    std::size_t node_index(const Vec3& d) const {
        auto it = node_key.find(canonical_dir(d));
        if (it == node_key.end()) throw std::invalid_argument("Arrangement: unknown node");
        return it->second;
    }
    std::map<std::array<Int, 3>, std::size_t> node_key;
};

namespace detail {

/// Counterclockwise tangent comparison at sphere point q (seen from outside),
/// measuring angles from `ref`. Returns true if a sorts strictly before b.
inline bool ccw_before(const Vec3& q, const Vec3& ref, const Vec3& a, const Vec3& b) {
    auto bucket = [&](const Vec3& w) {
        int s = tangent_orient(q, ref, w);
        if (s > 0) return 1;
        if (s < 0) return 3;
        return dot(ref, w) > 0 ? 0 : 2;
    };
    int ba = bucket(a), bb = bucket(b);
    if (ba != bb) return ba < bb;
    if (ba == 0 || ba == 2) return false;  // parallel tangents: equal
    return tangent_orient(q, a, b) > 0;
}

}  // namespace detail

inline Arrangement build_arrangement(const VisMap& m) {
    Arrangement ar;
    auto node_of = [&](const Vec3& d) {
        auto key = canonical_dir(d);
        auto it = ar.node_key.find(key);
        if (it != ar.node_key.end()) return it->second;
        std::size_t ix = ar.node_dir.size();
        ar.node_dir.push_back(d);
        ar.node_key.emplace(key, ix);
        return ix;
    };

    // Split every arc at the endpoints of other arcs interior to it.
    for (std::size_t i = 0; i < m.arcs.size(); ++i) {
        const Arc& a = m.arcs[i];
        struct Stop {
            std::size_t node;
            Rat alpha, beta;
        };
        std::vector<Stop> stops;
        stops.push_back({node_of(a.u.v), Rat(1), Rat(0)});
        stops.push_back({node_of(a.v.v), Rat(0), Rat(1)});
        for (std::size_t j = 0; j < m.arcs.size(); ++j) {
            if (j == i) continue;
            for (int k = 0; k < 2; ++k) {
                const Vec3& q = m.endpoint(j, k).v;
                if (a.contains(q, /*strict=*/true))
                    stops.push_back({node_of(q), a.coord_alpha(q), a.coord_beta(q)});
            }
        }
        // Order along the arc from u (beta/alpha = 0) to v by the exact ratio.
        std::sort(stops.begin(), stops.end(), [](const Stop& s, const Stop& t) {
            return s.beta * t.alpha < t.beta * s.alpha;
        });
        stops.erase(std::unique(stops.begin(), stops.end(),
                                [](const Stop& s, const Stop& t) { return s.node == t.node; }),
                    stops.end());
        for (std::size_t s = 0; s + 1 < stops.size(); ++s) {
            std::size_t h = ar.half_edges.size();
            ar.half_edges.push_back({i, stops[s].node, stops[s + 1].node, true, h + 1, 0, 0});
            ar.half_edges.push_back({i, stops[s + 1].node, stops[s].node, false, h, 0, 0});
        }
    }

    // Rotation system: sort outgoing half-edges counterclockwise at each node.
    ar.out_edges.assign(ar.node_dir.size(), {});
    for (std::size_t h = 0; h < ar.half_edges.size(); ++h)
        ar.out_edges[ar.half_edges[h].from].push_back(h);
    auto out_tangent = [&](std::size_t h) {
        const HalfEdge& he = ar.half_edges[h];
        Vec3 t = m.arcs[he.arc].forward_tangent(ar.node_dir[he.from]);
        return he.forward ? t : -t;
    };
    for (std::size_t nix = 0; nix < ar.node_dir.size(); ++nix) {
        auto& out = ar.out_edges[nix];
        if (out.size() < 2) continue;
        const Vec3 q = ar.node_dir[nix];
        const Vec3 ref = out_tangent(out.front());
        std::sort(out.begin() + 1, out.end(), [&](std::size_t h1, std::size_t h2) {
            return detail::ccw_before(q, ref, out_tangent(h1), out_tangent(h2));
        });
    }

    // next(h): at the head of h, continue with the clockwise-most turn, i.e.
    // the predecessor of twin(h) in the counterclockwise rotation. This keeps
    // the traced face on the left of the walk.
    for (std::size_t h = 0; h < ar.half_edges.size(); ++h) {
        std::size_t tw = ar.half_edges[h].twin;
        const auto& out = ar.out_edges[ar.half_edges[h].to];
        std::size_t pos = 0;
        while (out[pos] != tw) ++pos;
        ar.half_edges[h].next = out[(pos + out.size() - 1) % out.size()];
    }

    // Trace face cycles.
    std::vector<bool> seen(ar.half_edges.size(), false);
    for (std::size_t h0 = 0; h0 < ar.half_edges.size(); ++h0) {
        if (seen[h0]) continue;
        SphereFace f;
        f.id = ar.faces.size();
        for (std::size_t h = h0; !seen[h]; h = ar.half_edges[h].next) {
            seen[h] = true;
            ar.half_edges[h].face = f.id;
            f.boundary.emplace_back(ar.half_edges[h].arc, ar.half_edges[h].forward);
        }
        ar.faces.push_back(std::move(f));
    }
    return ar;
}

inline std::vector<SphereFace> enumerate_faces(const VisMap& m) {
    if (m.arcs.empty()) return {SphereFace{0, {}}};  // the whole sphere
    return build_arrangement(m).faces;
}

// ---------------------------------------------------------------------------
// Great semicircles.

/// The semicircle {d : d.normal = 0, d.m >= 0}; its relative interior
/// requires d.m > 0 instead.
struct GreatSemicircle {
    Dir3 normal;
    Dir3 m;

    GreatSemicircle(Dir3 n, Dir3 m_) : normal(std::move(n)), m(std::move(m_)) {
        if (dot(normal.v, m.v) != 0)
            throw std::invalid_argument("GreatSemicircle: selector not orthogonal to normal");
    }
};

/// Does the closed arc meet the relative interior of the semicircle?
inline bool arc_meets_semicircle_relint(const Arc& a, const GreatSemicircle& c) {
    Vec3 x = cross(a.n, c.normal.v);
    if (x.is_zero()) {
        // Arc lies on the semicircle's great circle.
        if (dot(a.u.v, c.m.v) > 0 || dot(a.v.v, c.m.v) > 0) return true;
        // Both endpoints on the closed negative side: the arc pokes through
        // {d.m > 0} only if a zero of d.m lies strictly inside it.
        Vec3 w = cross(a.n, c.m.v);
        return a.contains(w, true) || a.contains(-w, true);
    }
    return (a.contains(x, false) && dot(x, c.m.v) > 0) ||
           (a.contains(-x, false) && dot(-x, c.m.v) > 0);
}

struct PierceReport {
    long samples = 0;
    std::vector<GreatSemicircle> counterexamples;
};

inline bool semicircle_pierces(const VisMap& m, const GreatSemicircle& c) {
    for (const auto& a : m.arcs)
        if (arc_meets_semicircle_relint(a, c)) return true;
    return false;
}

inline GreatSemicircle random_semicircle(Rng& rng) {
    auto small_vec = [&] { return Vec3{Rat(rng.range(-9, 9)), Rat(rng.range(-9, 9)), Rat(rng.range(-9, 9))}; };
    for (;;) {
        Vec3 n = small_vec(), r = small_vec();
        if (n.is_zero()) continue;
        Vec3 m = cross(n, r);
        if (m.is_zero()) continue;
        return GreatSemicircle(Dir3(n), Dir3(m));
    }
}

/// Sampled check that every great semicircle's relative interior meets some
/// arc. A counterexample indicts the implementation, not the statement.
inline PierceReport semicircle_pierce_test(const VisMap& m, long samples, std::uint64_t seed) {
    PierceReport rep;
    rep.samples = samples;
    Rng rng(seed);
    for (long i = 0; i < samples; ++i) {
        GreatSemicircle c = random_semicircle(rng);
        if (!semicircle_pierces(m, c)) rep.counterexamples.push_back(c);
    }
    return rep;
}

/// Is the closed arc contained in the relative interior of the semicircle?
inline bool arc_in_semicircle_relint(const Arc& a, const GreatSemicircle& c) {
    return cross(a.n, c.normal.v).is_zero() && dot(a.u.v, c.m.v) > 0 && dot(a.v.v, c.m.v) > 0;
}

// ---------------------------------------------------------------------------
// SOD JSON (plot-data contract).

namespace detail {

inline nlohmann::json dir_to_json(const Vec3& d) {
    auto k = canonical_dir(d);
    return nlohmann::json::array(
        {k[0].str(), k[1].str(), k[2].str()});
}

inline Vec3 vec_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected coordinate triple");
    auto coord = [&](int i) {
        return j[i].is_string() ? rat_from_string(j[i].get<std::string>())
                                : Rat(j[i].get<long long>());
    };
    return {coord(0), coord(1), coord(2)};
}

}  // namespace detail

inline nlohmann::json sod_to_json(const SOD& s) {
    nlohmann::json j;
    j["viewpoint"] = point_to_json(s.map.viewpoint);
    j["arcs"] = nlohmann::json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Arc& a = s.map.arcs[i];
        j["arcs"].push_back({{"id", i},
                             {"normal", detail::dir_to_json(a.n)},
                             {"u", detail::dir_to_json(a.u.v)},
                             {"v", detail::dir_to_json(a.v.v)},
                             {"source_edge", a.source_edge},
                             {"t_lo", rat_to_string(a.t_lo)},
                             {"t_hi", rat_to_string(a.t_hi)}});
    }
    j["feeds_into"] = nlohmann::json::array();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (int k = 0; k < 2; ++k)
            j["feeds_into"].push_back({i, s.host(i, k)});
    return j;
}

/// Load an abstract arc set (possibly not from any world) and recompute its
/// incidences; callers decide whether to upgrade it to a SOD.
inline VisMap vismap_from_json(const nlohmann::json& j) {
    VisMap m;
    m.viewpoint = j.contains("viewpoint") ? point_from_json(j.at("viewpoint")) : Point3{};
    for (const auto& ja : j.at("arcs")) {
        Rat lo = ja.contains("t_lo") ? rat_from_string(ja.at("t_lo").get<std::string>()) : Rat(0);
        Rat hi = ja.contains("t_hi") ? rat_from_string(ja.at("t_hi").get<std::string>()) : Rat(1);
        m.arcs.emplace_back(Dir3(detail::vec_from_json(ja.at("u"))),
                            Dir3(detail::vec_from_json(ja.at("v"))),
                            ja.value("source_edge", std::string{}), lo, hi);
    }
    detail::compute_incidence(m);
    return m;
}

}  // namespace sod
