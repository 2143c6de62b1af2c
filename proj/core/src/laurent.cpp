#include "zmlp/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace zmlp {

Int Multiplicity::value() const {
    if (inf_) throw std::logic_error("infinite multiplicity has no finite value");
    return v_;
}

std::strong_ordering Multiplicity::operator<=>(const Multiplicity& o) const {
    if (inf_ || o.inf_) return static_cast<int>(inf_) <=> static_cast<int>(o.inf_);
    return v_ <=> o.v_;
}

std::string to_string(const Multiplicity& m) { return m.is_infinite() ? "inf" : std::to_string(m.value()); }

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (c != 0) terms_.emplace(Point{0, 0}, c);
}

LaurentPoly LaurentPoly::monomial(Point exp, const BigInt& coeff) {
    LaurentPoly f;
    f.add_term(exp, coeff);
    return f;
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms) {
    LaurentPoly f;
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

LaurentPoly LaurentPoly::binomial(Point m) { return LaurentPoly(1) + monomial(m); }

void LaurentPoly::add_term(Point exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt LaurentPoly::coeff(Point exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<Point> LaurentPoly::support() const {
    std::vector<Point> out;
    out.reserve(terms_.size());
    for (const auto& kv : terms_) out.push_back(kv.first);
    return out;
}

LatticePolygon LaurentPoly::newton_polygon() const {
    if (is_zero()) throw std::invalid_argument("empty polynomial");
    return LatticePolygon::hull(support());
}

bool LaurentPoly::all_coefficients_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly operator*(const BigInt& c, const LaurentPoly& f) { return f.scaled(c); }

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& kv : r.terms_) kv.second *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(Point m) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + m, c);
    return r;
}

LaurentPoly LaurentPoly::pow(Int k) const {
    if (k < 0) {
        if (!is_monomial() || (terms_.begin()->second != 1 && terms_.begin()->second != -1))
            throw std::invalid_argument("negative power of a non-unit");
        Point e = terms_.begin()->first;
        BigInt c = terms_.begin()->second;
        BigInt ck = (c == -1 && (k % 2 != 0)) ? BigInt(-1) : BigInt(1);
        return monomial(checked_mul(k, 1) * e, ck);
    }
    LaurentPoly result(1), base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::transformed(const UnimodularAffineMap& g) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(g.apply(e), c);
    return r;
}

LaurentPoly LaurentPoly::swapped() const { return transformed(UnimodularAffineMap::swap_xy()); }

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    return std::lexicographical_compare(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                        [](const auto& a, const auto& b) {
                                            if (a.first != b.first) return a.first < b.first;
                                            return a.second < b.second;
                                        });
}

namespace {

void append_var(std::ostringstream& os, char v, Int e, bool& first) {
    if (e == 0) return;
    if (!first) os << "*";
    os << v;
    if (e != 1) os << "^" << e;
    first = false;
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = abs(c);
        if (lead) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        lead = false;
        bool first = true;
        if (a != 1 || (e.x == 0 && e.y == 0)) {
            os << a.get_str();
            first = false;
        }
        append_var(os, 'x', e.x, first);
        append_var(os, 'y', e.y, first);
    }
    return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    LaurentPoly parse() {
        LaurentPoly f = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return f;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) + ": " + what);
    }

    LaurentPoly expr() {
        LaurentPoly f;
        bool neg = eat('-');
        if (!neg) eat('+');
        LaurentPoly t = term();
        f += neg ? -t : t;
        while (true) {
            if (eat('+')) {
                f += term();
            } else if (eat('-')) {
                f += -term();
            } else {
                break;
            }
        }
        return f;
    }

    LaurentPoly term() {
        LaurentPoly f = factor();
        while (true) {
            skip();
            if (eat('*')) {
                f = f * factor();
            } else if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 'x' || s_[pos_] == 'y' ||
                                            std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
                f = f * factor();
            } else {
                break;
            }
        }
        return f;
    }

    LaurentPoly factor() {
        LaurentPoly base = primary();
        if (eat('^')) {
            skip();
            bool neg = false;
            if (eat('-')) neg = true;
            if (eat('(')) {
                neg = neg != eat('-');
                Int e = integer();
                if (!eat(')')) fail("expected ')'");
                return base.pow(neg ? -e : e);
            }
            Int e = integer();
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    Int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    LaurentPoly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly f = expr();
            if (!eat(')')) fail("expected ')'");
            return f;
        }
        if (c == 'x') {
            ++pos_;
            return LaurentPoly::monomial({1, 0});
        }
        if (c == 'y') {
            ++pos_;
            return LaurentPoly::monomial({0, 1});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return LaurentPoly(BigInt(s_.substr(start, pos_ - start)));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------- slicing

std::vector<Slice> slices(const LaurentPoly& f, const AffineFunctional& phi) {
    if (f.is_zero()) throw std::invalid_argument("empty polynomial");
    std::map<Int, LaurentPoly::Terms> by_level;
    for (const auto& [e, c] : f.terms()) by_level[phi(e)].emplace(e, c);
    std::vector<Slice> out;
    out.reserve(by_level.size());
    for (auto& [k, t] : by_level) out.push_back({k, LaurentPoly::from_terms(t)});
    return out;
}

LaurentPoly slice_at(const LaurentPoly& f, const AffineFunctional& phi, Int level) {
    LaurentPoly::Terms t;
    for (const auto& [e, c] : f.terms())
        if (phi(e) == level) t.emplace(e, c);
    return LaurentPoly::from_terms(t);
}

namespace {

// Coefficients c_0..c_n of g along m, starting at the lowest point; empty for g = 0.
std::vector<BigInt> line_coefficients(const LaurentPoly& g, Point m) {
    std::vector<BigInt> out;
    if (g.is_zero()) return out;
    if (m.x == 0 && m.y == 0) throw std::invalid_argument("zero direction");
    Point q = g.terms().begin()->first;
    Int mm = dot(m, m);
    std::vector<std::pair<Int, BigInt>> tc;
    Int tmin = 0, tmax = 0;
    for (const auto& [e, c] : g.terms()) {
        Point d = e - q;
        if (cross(d, m) != 0) throw std::invalid_argument("support not collinear with the direction");
        Int t = dot(d, m);
        if (t % mm != 0) throw std::invalid_argument("support not on the lattice line of the direction");
        t /= mm;
        tmin = std::min(tmin, t);
        tmax = std::max(tmax, t);
        tc.emplace_back(t, c);
    }
    out.assign(static_cast<std::size_t>(tmax - tmin + 1), BigInt(0));
    for (auto& [t, c] : tc) out[static_cast<std::size_t>(t - tmin)] = c;
    return out;
}

// Divides c(t) by (1 + t) in place when exact.
bool divide_by_one_plus_t(std::vector<BigInt>& c) {
    if (c.size() < 2) return false;
    std::size_t n = c.size() - 1;
    std::vector<BigInt> q(n);
    q[n - 1] = c[n];
    for (std::size_t i = n - 1; i > 0; --i) q[i - 1] = c[i] - q[i];
    if (c[0] - q[0] != 0) return false;
    c = std::move(q);
    return true;
}

}  // namespace

Multiplicity binomial_multiplicity(const LaurentPoly& g, Point m) {
    if (g.is_zero()) return Multiplicity::infinite();
    std::vector<BigInt> c = line_coefficients(g, primitive(m));
    Int d = 0;
    while (divide_by_one_plus_t(c)) ++d;
    return Multiplicity::finite(d);
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& h) {
    if (h.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (f.is_zero()) return LaurentPoly{};
    auto [flo, fhi] = f.newton_polygon().bounding_box();
    auto [hlo, hhi] = h.newton_polygon().bounding_box();
    Point qlo = flo - hlo, qhi = fhi - hhi;
    if (qlo.x > qhi.x || qlo.y > qhi.y) return std::nullopt;
    const auto lead_h = *h.terms().rbegin();
    LaurentPoly r = f, q;
    while (!r.is_zero()) {
        const auto& lead_r = *r.terms().rbegin();
        Point m = lead_r.first - lead_h.first;
        if (m.x < qlo.x || m.x > qhi.x || m.y < qlo.y || m.y > qhi.y) return std::nullopt;
        if (!mpz_divisible_p(lead_r.second.get_mpz_t(), lead_h.second.get_mpz_t())) return std::nullopt;
        BigInt c = lead_r.second / lead_h.second;
        LaurentPoly t = LaurentPoly::monomial(m, c);
        q += t;
        r = r - t * h;
    }
    return q;
}

std::optional<BinomialPower> as_binomial_power(const LaurentPoly& h) {
    if (h.is_zero()) return std::nullopt;
    const auto& t = h.terms();
    Point lo = t.begin()->first, hi = t.rbegin()->first;
    if (t.size() == 1) {
        if (t.begin()->second != 1) return std::nullopt;
        return BinomialPower{lo, {0, 0}, 0};
    }
    Int k = lattice_length(lo, hi);
    Point m = primitive(hi - lo);
    if (static_cast<Int>(t.size()) != k + 1) return std::nullopt;
    for (Int i = 0; i <= k; ++i)
        if (h.coeff(lo + i * m) != binomial(k, i)) return std::nullopt;
    return BinomialPower{lo, m, k};
}

}  // namespace zmlp
