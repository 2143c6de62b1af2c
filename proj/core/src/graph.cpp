#include "zmlp/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <tbb/parallel_for.h>

#include "zmlp/mutation.hpp"
#include "zmlp/zmlp.hpp"

namespace zmlp {

std::optional<std::size_t> MutationGraph::find(const LaurentPoly& f) const {
    LaurentPoly key = canonical_poly(f);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == key) return i;
    return std::nullopt;
}

std::vector<bool> MutationGraph::reachable_from_one() const {
    std::vector<bool> seen(nodes.size(), false);
    if (nodes.empty()) return seen;
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (auto [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return seen;
}

namespace {

std::vector<Point> directions_up_to(Int bound) {
    std::vector<Point> out;
    for (Int x = 0; x <= bound; ++x)
        for (Int y = -bound; y <= bound; ++y) {
            if (x == 0 && y <= 0) continue;
            if (gcd_int(x, y) == 1) out.push_back({x, y});
        }
    return out;
}

Int size_of(const LatticePolygon& p) { return p.dim() == 0 ? 0 : polygon_size(p); }

// Canonical images of all bounded mutations of f.
std::vector<LaurentPoly> neighbours(const LaurentPoly& f, const GraphOptions& opt, const std::vector<Point>& dirs) {
    std::set<LaurentPoly> out;
    LatticePolygon poly = f.newton_polygon();
    const Int slope_max = opt.max_size;
    for (Point m : dirs) {
        Point n{-m.y, m.x};
        LaurentPoly h = LaurentPoly::binomial(m);
        std::vector<std::pair<Int, Int>> div;
        for (const auto& s : slices(f, AffineFunctional{n, 0}))
            div.emplace_back(s.level, binomial_multiplicity(s.poly, m).value_or(0));
        for (Int t = -slope_max; t <= slope_max; ++t) {
            // phi constant on the support multiplies f by a binomial power
            bool constant = t == 0 || div.size() == 1;
            Int c_min = std::numeric_limits<Int>::min();
            for (auto [v, d] : div) c_min = std::max(c_min, -d - t * v);
            for (Int c = c_min; c <= c_min + 2 * opt.max_size + 2; ++c) {
                MutationSpec spec{AffineFunctional{t * n, c}, h};
                LatticePolygon img;
                try {
                    img = mutate_polytope(poly, spec);
                } catch (const std::exception&) {
                    continue;
                }
                if (img.empty()) continue;
                if (size_of(img) > opt.max_size) {
                    if (c > 0) break;
                    continue;
                }
                if (constant && img.dim() == 2 && !opt.include_products) continue;
                if (!is_mutable(f, spec)) continue;
                LaurentPoly g = mutate(f, spec);
                if (g.is_zero() || !g.all_coefficients_positive()) continue;
                out.insert(canonical_poly(g));
            }
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace

MutationGraph build_mutation_graph(const GraphOptions& options) {
    if (options.max_size < 0) throw std::invalid_argument("size bound must be nonnegative");
    const auto dirs = directions_up_to(options.max_direction > 0 ? options.max_direction : options.max_size);
    MutationGraph g;
    std::map<LaurentPoly, std::size_t> index;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    auto intern = [&](const LaurentPoly& f) {
        auto [it, fresh] = index.emplace(f, g.nodes.size());
        if (fresh) g.nodes.push_back(f);
        return std::make_pair(it->second, fresh);
    };
    std::vector<std::size_t> frontier{intern(LaurentPoly(1)).first};
    while (!frontier.empty()) {
        std::vector<std::vector<LaurentPoly>> found(frontier.size());
        tbb::parallel_for(std::size_t{0}, frontier.size(),
                          [&](std::size_t i) { found[i] = neighbours(g.nodes[frontier[i]], options, dirs); });
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < frontier.size(); ++i)
            for (const auto& h : found[i]) {
                auto [j, fresh] = intern(h);
                if (fresh) next.push_back(j);
                if (j != frontier[i]) edges.insert(std::minmax(frontier[i], j));
            }
        if (next.empty() && options.include_products) {
            const std::size_t n = g.nodes.size();
            for (std::size_t i = 1; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    LaurentPoly p = g.nodes[i] * g.nodes[j];
                    if (size_of(p.newton_polygon()) > options.max_size) continue;
                    auto [k, fresh] = intern(canonical_poly(p));
                    if (fresh) next.push_back(k);
                }
        }
        frontier = std::move(next);
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

std::string coefficient_array(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    LatticePolygon poly = f.newton_polygon();
    std::map<Int, std::vector<Point>> rows;
    for (auto p : poly.lattice_points()) rows[p.y].push_back(p);
    std::ostringstream os;
    bool first_row = true;
    for (auto& [y, pts] : rows) {
        std::sort(pts.begin(), pts.end());
        if (!first_row) os << "/";
        first_row = false;
        for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? "," : "") << f.coeff(pts[i]).get_str();
    }
    return os.str();
}

std::string to_dot(const MutationGraph& graph) {
    std::ostringstream os;
    os << "graph mutations {\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        const LaurentPoly& f = graph.nodes[i];
        LaurentPoly shown = f;
        if (auto pos = standard_position(f); !pos && classify_rectangular(f.newton_polygon())) shown = standardize(f);
        os << "  n" << i << " [label=\"" << coefficient_array(shown) << "\\n"
           << to_string(f.newton_polygon()) << "\"];\n";
    }
    for (auto [i, j] : graph.edges) os << "  n" << i << " -- n" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace zmlp
