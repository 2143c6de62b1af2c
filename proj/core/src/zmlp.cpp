#include "zmlp/zmlp.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

#include <tbb/parallel_for.h>

namespace zmlp {

// ------------------------------------------------------------ enumeration

namespace {

// Partitions of n with parts <= max_part and the given sum of squares,
// generated in lexicographically decreasing order.
void partitions_with_squares(Int n, Int max_part, Int squares, std::vector<Int>& cur,
                             const std::function<void(const std::vector<Int>&)>& emit) {
    if (n == 0) {
        if (squares == 0) emit(cur);
        return;
    }
    // each remaining part p satisfies 1 <= p <= max_part, hence n <= squares <= max_part * n
    if (squares < n || squares > checked_mul(max_part, n)) return;
    for (Int p = std::min(max_part, n); p >= 1; --p) {
        Int sq = p * p;
        if (sq > squares) continue;
        cur.push_back(p);
        partitions_with_squares(n - p, p, squares - sq, cur, emit);
        cur.pop_back();
    }
}

void partitions_bounded(Int n, Int max_part, Int max_squares, std::vector<Int>& cur,
                        const std::function<void(const std::vector<Int>&)>& emit) {
    if (n == 0) {
        emit(cur);
        return;
    }
    if (max_squares < n) return;
    for (Int p = std::min(max_part, n); p >= 1; --p) {
        if (p * p > max_squares) continue;
        cur.push_back(p);
        partitions_bounded(n - p, p, max_squares - p * p, cur, emit);
        cur.pop_back();
    }
}

// max(a_part) + max(b_part) <= max(a, b) cannot hold on the unit triangle,
// whose unique ZMLP 1 + x + y is admitted explicitly.
Int max_sum_bound(Int a, Int b) { return (a == 1 && b == 1) ? 2 : std::max(a, b); }

}  // namespace

bool satisfies_comb(const DualPair& pair, Int a, Int b) {
    if (pair.a() != a || pair.b() != b || pair.a_part.empty() || pair.b_part.empty()) return false;
    Int squares = checked_add(pair.a_part.sum_of_squares(), pair.b_part.sum_of_squares());
    return squares == checked_add(checked_mul(a, b), 1) && pair.a_part.max_part() <= b &&
           pair.b_part.max_part() <= a && pair.a_part.max_part() + pair.b_part.max_part() <= max_sum_bound(a, b);
}

std::vector<DualPair> enumerate_comb(Int a, Int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("triangle legs must be positive");
    const Int total = checked_add(checked_mul(a, b), 1);
    const Int bound = max_sum_bound(a, b);
    std::vector<DualPair> out;
    std::vector<Int> cur_a, cur_b;
    partitions_bounded(a, std::min(b, bound - 1), total - b, cur_a, [&](const std::vector<Int>& pa) {
        Partition part_a(pa);
        Int rest = total - part_a.sum_of_squares();
        Int cap = std::min(a, bound - part_a.max_part());
        partitions_with_squares(b, cap, rest, cur_b, [&](const std::vector<Int>& pb) {
            DualPair pair{part_a, Partition(pb)};
            if (!satisfies_comb(pair, a, b)) throw std::logic_error("enumeration produced an invalid pair");
            out.push_back(std::move(pair));
        });
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_comb(Int a, Int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("triangle legs must be positive");
    const Int total = checked_add(checked_mul(a, b), 1);
    const Int bound = max_sum_bound(a, b);
    const Int n_max = std::max(a, b);
    const Int p_max = std::min(n_max, std::max(std::min(a, b), bound - 1));
    const std::size_t width = static_cast<std::size_t>(total + 1);
    // table[n * width + q]: partitions of n with parts <= p and sum of squares q
    std::vector<std::uint64_t> table(static_cast<std::size_t>(n_max + 1) * width, 0);
    table[0] = 1;
    // exact[side][p][q]: partitions of the side's degree with largest part p
    std::vector<std::vector<std::uint64_t>> exact_a(static_cast<std::size_t>(p_max + 1)),
        exact_b(static_cast<std::size_t>(p_max + 1));
    for (Int p = 1; p <= p_max; ++p) {
        Int sq = p * p;
        for (Int n = p; n <= n_max; ++n)
            for (Int q = sq; q <= total; ++q)
                table[static_cast<std::size_t>(n) * width + static_cast<std::size_t>(q)] +=
                    table[static_cast<std::size_t>(n - p) * width + static_cast<std::size_t>(q - sq)];
        auto extract = [&](Int n, std::vector<std::uint64_t>& dst) {
            dst.assign(width, 0);
            if (n < p) return;
            for (Int q = sq; q <= total; ++q)
                dst[static_cast<std::size_t>(q)] =
                    table[static_cast<std::size_t>(n - p) * width + static_cast<std::size_t>(q - sq)];
        };
        extract(a, exact_a[static_cast<std::size_t>(p)]);
        extract(b, exact_b[static_cast<std::size_t>(p)]);
    }
    std::uint64_t count = 0;
    for (Int pa = 1; pa <= std::min(b, p_max); ++pa) {
        const auto& ea = exact_a[static_cast<std::size_t>(pa)];
        for (Int pb = 1; pb <= std::min(a, p_max) && pa + pb <= bound; ++pb) {
            const auto& eb = exact_b[static_cast<std::size_t>(pb)];
            for (Int q = 0; q <= total; ++q)
                if (ea[static_cast<std::size_t>(q)])
                    count += ea[static_cast<std::size_t>(q)] * eb[static_cast<std::size_t>(total - q)];
        }
    }
    return count;
}

// ---------------------------------------------------------- classification

std::string to_string(FamilyLabel label) {
    switch (label) {
        case FamilyLabel::Tom: return "Tom";
        case FamilyLabel::Jerry: return "Jerry";
        case FamilyLabel::Spike: return "Spike";
        case FamilyLabel::Tyke: return "Tyke";
        case FamilyLabel::Unnamed: return "Unnamed";
    }
    return "Unnamed";
}

namespace {

// Blocks of `block` repeated in front of `tail`, filling up to degree n.
std::optional<Partition> padded(Int block, Int n, std::vector<Int> tail) {
    Int rest = n - std::accumulate(tail.begin(), tail.end(), Int{0});
    if (rest < 0 || rest % block != 0) return std::nullopt;
    std::vector<Int> parts(static_cast<std::size_t>(rest / block), block);
    parts.insert(parts.end(), tail.begin(), tail.end());
    return Partition(std::move(parts));
}

std::vector<Int> ones(Int n) { return std::vector<Int>(static_cast<std::size_t>(n), 1); }

void add_row(std::vector<FamilyRow>& rows, FamilyLabel label, const Partition& a_part,
             const std::optional<Partition>& b_part) {
    if (b_part) rows.push_back({label, {a_part, *b_part}});
}

}  // namespace

std::vector<FamilyRow> family_rows(Int a, Int b) {
    std::vector<FamilyRow> rows;
    if (a < 1 || b <= a) return rows;
    if (a == 1) {
        add_row(rows, FamilyLabel::Tom, Partition{1}, Partition(ones(b)));
    } else if (a == 2) {
        if (b % 2 == 1) {
            add_row(rows, FamilyLabel::Tom, Partition{1, 1}, padded(2, b, {1}));
            add_row(rows, FamilyLabel::Jerry, Partition{2}, padded(2, b, {1, 1, 1}));
        }
    } else if (a == 3 && b % 3 != 0) {
        if (b % 3 == 1) {
            add_row(rows, FamilyLabel::Tom, Partition{1, 1, 1}, padded(3, b, {1}));
            add_row(rows, FamilyLabel::Jerry, Partition{3}, padded(3, b, {1, 1, 1, 1}));
            add_row(rows, FamilyLabel::Spike, Partition{2, 1}, padded(3, b, {2, 2}));
            add_row(rows, FamilyLabel::Tyke, Partition{3}, padded(3, b, {2, 2, 2, 1}));
        } else {
            add_row(rows, FamilyLabel::Tom, Partition{1, 1, 1}, padded(3, b, {2}));
            add_row(rows, FamilyLabel::Jerry, Partition{3}, padded(3, b, {2, 2, 2, 2}));
            add_row(rows, FamilyLabel::Spike, Partition{2, 1}, padded(3, b, {1, 1}));
            add_row(rows, FamilyLabel::Tyke, Partition{3}, padded(3, b, {2, 1, 1, 1}));
        }
    } else if (b == a + 1) {
        const Int k = a;
        add_row(rows, FamilyLabel::Tom, Partition(ones(k)), Partition{k, 1});
        add_row(rows, FamilyLabel::Jerry, Partition{k}, Partition(ones(k + 1)));
        if (k % 2 == 0)
            add_row(rows, FamilyLabel::Spike, Partition{k / 2, k / 2}, Partition{k / 2 + 1, k / 2});
        else
            add_row(rows, FamilyLabel::Spike, Partition{(k + 1) / 2, (k - 1) / 2},
                    Partition{(k + 1) / 2, (k + 1) / 2});
    }
    return rows;
}

FamilyLabel classify_family(const DualPair& pair, Int a, Int b) {
    DualPair p = pair;
    if (p.a() == b && p.b() == a && a != b) std::swap(p.a_part, p.b_part);
    if (p.a() != a || p.b() != b) return FamilyLabel::Unnamed;
    if (a > b) {
        std::swap(p.a_part, p.b_part);
        std::swap(a, b);
    }
    for (const auto& row : family_rows(a, b))
        if (row.pair == p) return row.label;
    return FamilyLabel::Unnamed;
}

// ------------------------------------------------------------ certificates

std::size_t MutationCertificate::mutation_count() const {
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [](const CertificateStep& s) { return s.spec.has_value(); }));
}

namespace {

bool is_unit_monomial(const LaurentPoly& f) { return f.is_monomial() && f.terms().begin()->second == 1; }

}  // namespace

ReplayResult replay(const MutationCertificate& cert) {
    LaurentPoly cur = cert.start;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& step = cert.steps[i];
        std::string where = "step " + std::to_string(i + 1) + " (" + step.label + ")";
        if (step.spec) {
            try {
                step.spec->validate();
            } catch (const std::exception& e) {
                return {false, where + ": " + e.what()};
            }
            auto bp = as_binomial_power(step.spec->h);
            if (!bp || bp->exponent < 1) return {false, where + ": factor is not a power of a binomial"};
            if (!is_mutable(cur, *step.spec)) return {false, where + ": polynomial is not mutable"};
            cur = mutate(cur, *step.spec);
        }
        cur = cur.transformed(step.frame);
        if (!(cur == step.result)) return {false, where + ": result differs from the recorded polynomial"};
    }
    if (!is_unit_monomial(cur)) return {false, "chain ends at " + cur.to_string() + " instead of 1"};
    return {true, "ok"};
}

namespace {

// z^c (1 + z^m)^k with k >= 1: the last step divides it out.
std::optional<CertificateStep> final_step(const LaurentPoly& f) {
    auto bp = as_binomial_power(f);
    if (!bp || bp->exponent < 1) return std::nullopt;
    CertificateStep s;
    s.label = "final";
    s.spec = MutationSpec{AffineFunctional{{0, 0}, -1}, f};
    s.result = LaurentPoly(1);
    return s;
}

}  // namespace

// ------------------------------------------------------ triangular search

std::string to_string(TriangularMove m) {
    switch (m) {
        case TriangularMove::Tau: return "tau";
        case TriangularMove::AlphaInv: return "alpha^-1";
        case TriangularMove::Beta: return "beta";
    }
    return "?";
}

namespace {

class TriangularSearch {
public:
    bool run(const LaurentPoly& f, bool after_tau) {
        auto pos = standard_position(f);
        if (!pos) return false;
        if (pos->a == 1) return base(f, pos->b);
        if (failed_.count({f, after_tau})) return false;
        if (try_beta(f, *pos) || try_alpha_inv(f, *pos)) return true;
        if (!after_tau) {
            push(TriangularMove::Tau, "tau", std::nullopt, UnimodularAffineMap::swap_xy(), tau(f));
            if (run(tau(f), true)) return true;
            pop();
        }
        failed_.insert({f, after_tau});
        return false;
    }

    std::vector<TriangularMove> moves;
    std::vector<CertificateStep> steps;

private:
    void push(TriangularMove m, std::string label, std::optional<MutationSpec> spec, UnimodularAffineMap frame,
              LaurentPoly result) {
        moves.push_back(m);
        steps.push_back({std::move(label), std::move(spec), frame, std::move(result)});
    }
    void pop() {
        moves.pop_back();
        steps.pop_back();
    }

    static std::optional<Int> beta_slope(const LaurentPoly& f) {
        Partition steps = divstep(f, f.newton_polygon().edge(0));
        if (steps.empty()) return std::nullopt;
        return steps.parts.front();
    }

    bool try_beta(const LaurentPoly& f, TrianglePosition pos) {
        auto slope = beta_slope(f);
        if (!slope) return false;
        Int new_b = *slope * pos.a - pos.b;
        if (new_b < 1 || new_b >= pos.b) return false;
        MutationSpec spec = beta_spec(pos.b, *slope);
        if (!is_mutable(f, spec)) return false;
        LaurentPoly g = mutate(f, spec).transformed(beta_reframe(pos.a));
        if (!standard_position(g)) return false;
        push(TriangularMove::Beta, "beta", spec, beta_reframe(pos.a), g);
        if (run(g, false)) return true;
        pop();
        return false;
    }

    bool try_alpha_inv(const LaurentPoly& f, TrianglePosition pos) {
        if (pos.b <= pos.a) return false;
        auto g = alpha_inv(f);
        if (!g) return false;
        push(TriangularMove::AlphaInv, "alpha^-1", alpha_inv_spec(pos.a), UnimodularAffineMap::identity(), *g);
        if (run(*g, false)) return true;
        pop();
        return false;
    }

    // (1+x)^b + y: beta with slope b leaves 1 + y, which is divided out.
    bool base(const LaurentPoly& f, Int b) {
        MutationSpec spec = beta_spec(b, b);
        if (!is_mutable(f, spec)) return false;
        LaurentPoly g = mutate(f, spec).transformed(beta_reframe(1));
        auto last = final_step(g);
        if (!last) return false;
        steps.push_back({"beta", spec, beta_reframe(1), g});
        steps.push_back(*last);
        return true;
    }

    std::set<std::pair<LaurentPoly, bool>> failed_;
};

}  // namespace

std::optional<TriangularCertificate> triangular_reduce(const LaurentPoly& f) {
    if (f.is_zero()) return std::nullopt;
    LatticePolygon poly = f.newton_polygon();
    auto rt = classify_rectangular(poly);
    if (!rt) return std::nullopt;
    TriangularCertificate out;
    out.certificate.start = f;
    LaurentPoly g = f;
    if (!standard_position(f)) {
        UnimodularAffineMap frame = UnimodularAffineMap::swap_xy().compose(rt->map);
        g = f.transformed(frame);
        out.certificate.steps.push_back({"normalize", std::nullopt, frame, g});
    }
    TriangularSearch search;
    if (!search.run(g, false)) return std::nullopt;
    try {
        out.pair = dual_pair(g).pair;
    } catch (const std::exception&) {
        out.pair = {};
    }
    out.moves = std::move(search.moves);
    for (auto& s : search.steps) out.certificate.steps.push_back(std::move(s));
    return out;
}

std::optional<TriangularCertificate> triangular_reduce(const DualPair& pair) {
    auto f = zmlp_from_pair(pair);
    if (!f) return std::nullopt;
    auto cert = triangular_reduce(*f);
    if (cert) cert->pair = pair;
    return cert;
}

// -------------------------------------------------------- general search

LaurentPoly canonical_poly(const LaurentPoly& f) {
    if (f.is_zero()) return f;
    LatticePolygon poly = f.newton_polygon();
    std::optional<std::pair<LatticePolygon, LaurentPoly>> best;
    for (const auto& g : normalizing_frames(poly)) {
        std::pair<LatticePolygon, LaurentPoly> img{poly.transformed(g), f.transformed(g)};
        if (!best || img.first < best->first || (img.first == best->first && img.second < best->second))
            best = std::move(img);
    }
    return best->second;
}

namespace {

Point positive_direction(Point m) { return (m.x < 0 || (m.x == 0 && m.y < 0)) ? -m : m; }

bool spec_less(const MutationSpec& s, const MutationSpec& t) {
    if (s.phi.normal != t.phi.normal) return s.phi.normal < t.phi.normal;
    if (s.phi.constant != t.phi.constant) return s.phi.constant < t.phi.constant;
    return s.h < t.h;
}

}  // namespace

std::vector<MutationSpec> candidate_mutations(const LaurentPoly& f) {
    std::vector<MutationSpec> out;
    if (f.is_zero()) return out;
    LatticePolygon poly = f.newton_polygon();
    std::vector<Point> directions;
    if (poly.dim() == 1) {
        directions.push_back(positive_direction(primitive(poly.vertices()[1] - poly.vertices()[0])));
    } else if (poly.dim() == 2) {
        for (const auto& e : poly.edges()) directions.push_back(positive_direction(e.tangent));
    }
    std::sort(directions.begin(), directions.end());
    directions.erase(std::unique(directions.begin(), directions.end()), directions.end());

    Int t_max = 1;
    for (const auto& e : poly.edges()) t_max = std::max(t_max, e.length);

    for (Point m : directions) {
        Point n{-m.y, m.x};
        LaurentPoly h = LaurentPoly::binomial(m);
        // divisibility of each slice along m, by level of n
        std::vector<std::pair<Int, Int>> div;  // (level, multiplicity)
        Int content = -1;
        for (const auto& s : slices(f, AffineFunctional{n, 0})) {
            Int d = binomial_multiplicity(s.poly, m).value_or(0);
            div.emplace_back(s.level, d);
            content = content < 0 ? d : std::min(content, d);
        }
        if (content > 0) out.push_back({AffineFunctional{{0, 0}, -content}, h});
        if (poly.dim() != 2) continue;
        for (Int sign : {1, -1}) {
            for (Int t = 1; t <= t_max; ++t) {
                Int c = std::numeric_limits<Int>::min();
                for (auto [v, d] : div) c = std::max(c, -d - sign * t * v);
                // only mutations that divide some slice
                bool shrinks = false;
                for (auto [v, d] : div) shrinks = shrinks || (sign * t * v + c < 0);
                if (!shrinks) continue;
                out.push_back({AffineFunctional{sign * t * n, c}, h});
            }
        }
    }
    std::sort(out.begin(), out.end(), spec_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<MutationCertificate> verify_zmlp(const LaurentPoly& f, const SearchBounds& bounds, SearchStats* stats) {
    if (f.is_zero()) return std::nullopt;
    MutationCertificate cert;
    cert.start = f;
    if (is_unit_monomial(f)) return cert;

    struct Node {
        LaurentPoly poly;
        std::size_t parent;
        std::optional<MutationSpec> spec;
        std::size_t depth;
    };
    std::vector<Node> nodes{{f, 0, std::nullopt, 0}};
    using Entry = std::tuple<std::size_t, std::size_t, std::size_t>;  // points, depth, index
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    open.emplace(f.newton_polygon().lattice_point_count(), 0, 0);
    std::set<LaurentPoly> seen{canonical_poly(f)};
    SearchStats local;

    auto build = [&](std::size_t idx) {
        std::vector<std::size_t> chain;
        for (std::size_t i = idx; i != 0; i = nodes[i].parent) chain.push_back(i);
        std::reverse(chain.begin(), chain.end());
        for (auto i : chain)
            cert.steps.push_back({"mutation", nodes[i].spec, UnimodularAffineMap::identity(), nodes[i].poly});
        return cert;
    };

    while (!open.empty() && local.expanded < bounds.nodes) {
        auto [pts, depth, idx] = open.top();
        open.pop();
        ++local.expanded;
        if (depth >= bounds.depth) continue;
        LaurentPoly cur = nodes[idx].poly;
        for (const auto& spec : candidate_mutations(cur)) {
            if (!is_mutable(cur, spec)) continue;
            LaurentPoly g = mutate(cur, spec);
            if (g.is_zero() || !g.all_coefficients_positive()) continue;
            ++local.generated;
            if (!seen.insert(canonical_poly(g)).second) continue;
            nodes.push_back({g, idx, spec, depth + 1});
            if (is_unit_monomial(g)) {
                if (stats) *stats = local;
                return build(nodes.size() - 1);
            }
            open.emplace(g.newton_polygon().lattice_point_count(), depth + 1, nodes.size() - 1);
        }
    }
    if (stats) *stats = local;
    return std::nullopt;
}

// ------------------------------------------------------ small verification

std::string to_string(PairStatus s) {
    switch (s) {
        case PairStatus::Triangular: return "triangular";
        case PairStatus::NonTriangular: return "non-triangular";
        case PairStatus::Unverified: return "unverified";
        case PairStatus::Unrealizable: return "unrealizable";
        case PairStatus::ReplayFailed: return "replay-failed";
    }
    return "?";
}

bool SmallReport::all_pass() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const PairReport& p) {
        return p.status == PairStatus::Triangular || p.status == PairStatus::NonTriangular;
    });
}

bool SmallReport::no_failures() const {
    return std::none_of(pairs.begin(), pairs.end(), [](const PairReport& p) {
        return p.status == PairStatus::ReplayFailed || p.status == PairStatus::Unverified;
    });
}

SmallReport verify_small(Int limit, const SearchBounds& fallback) {
    SmallReport report;
    report.limit = limit;
    for (Int s = 2; s <= limit; ++s)
        for (Int a = 1; 2 * a <= s; ++a) {
            Int b = s - a;
            if (gcd_int(a, b) != 1) continue;
            for (auto& pair : enumerate_comb(a, b))
                report.pairs.push_back({a, b, pair, classify_family(pair, a, b), PairStatus::Unverified, 0});
        }
    tbb::parallel_for(std::size_t{0}, report.pairs.size(), [&](std::size_t i) {
        PairReport& r = report.pairs[i];
        auto f = zmlp_from_pair(r.pair);
        if (!f) {
            r.status = PairStatus::Unrealizable;
            return;
        }
        if (auto tri = triangular_reduce(*f)) {
            r.steps = tri->certificate.mutation_count();
            r.status = replay(tri->certificate).ok ? PairStatus::Triangular : PairStatus::ReplayFailed;
            return;
        }
        if (auto cert = verify_zmlp(*f, fallback)) {
            r.steps = cert->mutation_count();
            r.status = replay(*cert).ok ? PairStatus::NonTriangular : PairStatus::ReplayFailed;
        }
    });
    return report;
}

// ------------------------------------------------------------------ table 2

namespace {

std::vector<ResidueCount> stabilize(Int modulus, Int first, Int last, const std::function<std::uint64_t(Int)>& count) {
    std::vector<ResidueCount> out;
    for (Int r = 0; r < modulus; ++r) {
        if (gcd_int(r, modulus) != 1) continue;
        std::vector<std::pair<Int, std::uint64_t>> seq;
        for (Int x = first; x <= last; ++x)
            if (mod_floor(x, modulus) == r) seq.emplace_back(x, 0);
        tbb::parallel_for(std::size_t{0}, seq.size(), [&](std::size_t i) { seq[i].second = count(seq[i].first); });
        ResidueCount rc;
        rc.residue = r;
        if (seq.empty()) {
            out.push_back(rc);
            continue;
        }
        rc.count = seq.back().second;
        std::size_t i = seq.size() - 1;
        while (i > 0 && seq[i - 1].second == rc.count) --i;
        rc.from = seq[i].first;
        rc.stable = seq.size() - i >= 2;
        out.push_back(rc);
    }
    return out;
}

}  // namespace

std::vector<ResidueCount> table2_left(Int a, Int window) {
    if (a < 1) throw std::invalid_argument("leg must be positive");
    return stabilize(a, a + 1, a + window, [a](Int b) { return count_comb(a, b); });
}

std::vector<ResidueCount> table2_right(Int k, Int window) {
    if (k < 1) throw std::invalid_argument("offset must be positive");
    return stabilize(k, 1, window, [k](Int a) { return count_comb(a, a + k); });
}

}  // namespace zmlp
