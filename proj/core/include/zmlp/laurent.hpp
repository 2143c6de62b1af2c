#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zmlp/arith.hpp"
#include "zmlp/lattice.hpp"

namespace zmlp {

// Natural number or infinity; infinity is a distinct state, never a sentinel value.
class Multiplicity {
public:
    constexpr Multiplicity() = default;
    static constexpr Multiplicity finite(Int v) { return Multiplicity(v, false); }
    static constexpr Multiplicity infinite() { return Multiplicity(0, true); }

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }
    Int value() const;
    // The finite value, or `cap` for infinity.
    Int value_or(Int cap) const { return inf_ ? cap : v_; }

    bool operator==(const Multiplicity&) const = default;
    std::strong_ordering operator<=>(const Multiplicity& o) const;

private:
    constexpr Multiplicity(Int v, bool inf) : v_(v), inf_(inf) {}
    Int v_ = 0;
    bool inf_ = false;
};

std::string to_string(const Multiplicity& m);

class LaurentPoly {
public:
    using Terms = std::map<Point, BigInt>;

    LaurentPoly() = default;
    explicit LaurentPoly(const BigInt& c);
    static LaurentPoly monomial(Point exp, const BigInt& coeff = 1);
    static LaurentPoly from_terms(const Terms& terms);
    // 1 + z^m
    static LaurentPoly binomial(Point m);
    // Parses expressions such as "(1+x)^3 + 2*y*(1+x) + y^2" or "x^-1*y".
    static LaurentPoly parse(const std::string& text);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    BigInt coeff(Point exp) const;
    std::vector<Point> support() const;
    LatticePolygon newton_polygon() const;
    bool all_coefficients_positive() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly scaled(const BigInt& c) const;
    LaurentPoly shifted(Point m) const;  // z^m * f
    LaurentPoly pow(Int k) const;        // k >= 0, or any k for monomials with unit coefficient
    LaurentPoly transformed(const UnimodularAffineMap& g) const;  // exponents m |-> g(m)
    LaurentPoly swapped() const;         // f(y, x)

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator<(const LaurentPoly& o) const;

    std::string to_string() const;

private:
    void add_term(Point exp, const BigInt& c);
    Terms terms_;
};

LaurentPoly operator*(const BigInt& c, const LaurentPoly& f);

struct Slice {
    Int level = 0;
    LaurentPoly poly;
};

// Nonempty level sets of phi on the support, ordered by level.
std::vector<Slice> slices(const LaurentPoly& f, const AffineFunctional& phi);
// The slice at a given level; zero when no term lies on it.
LaurentPoly slice_at(const LaurentPoly& f, const AffineFunctional& phi, Int level);

// Multiplicity of 1 + z^m in g, whose support must lie on a line parallel to m.
Multiplicity binomial_multiplicity(const LaurentPoly& g, Point m);

// q with q * h = f, if it exists over the integers.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& h);

// Decomposition h = z^offset (1 + z^direction)^exponent with primitive direction.
struct BinomialPower {
    Point offset;
    Point direction;
    Int exponent = 0;
};

// Recognises unit-coefficient monomials and powers of primitive binomials.
std::optional<BinomialPower> as_binomial_power(const LaurentPoly& h);

}  // namespace zmlp
