// scalar_fn.hpp — scalar functions applied to matrices.
//
// A PiecewiseFn is either a named closed form or a sum of angle functions
//   x  |->  a*x + sum_i b_i * (x - x0_i)^+        (x0_i >= 0, distinct)
// Angle sums are the dense building block for monotone convex/concave
// functions; the named forms are kept exact because x^2/(x+1) and its
// relatives must not be approximated.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace matineq {

enum class NamedTag {
    identity,  // x
    sqrt_fn,   // sqrt(x), domain x >= 0
    square,    // x^2
    min1,      // min(x, 1)
    frac,      // x/(x+1), pole at x = -1
    g_a,       // a*x + x^2/(x+1), pole at x = -1
};

struct Kink {
    double x0;  // >= 0
    double b;
};

// Classification flags, read on the domain [0, inf).
struct FnClass {
    bool monotone_increasing = false;
    bool convex = false;
    bool concave = false;
    bool nonnegative_on_plus = false;
    bool zero_at_zero = false;
};

class PiecewiseFn {
public:
    static PiecewiseFn named(NamedTag tag, double param = 0.0);
    static PiecewiseFn angle_sum(double slope, std::vector<Kink> kinks);

    static PiecewiseFn identity() { return named(NamedTag::identity); }
    static PiecewiseFn sqrt() { return named(NamedTag::sqrt_fn); }
    static PiecewiseFn square() { return named(NamedTag::square); }
    static PiecewiseFn min1() { return named(NamedTag::min1); }
    static PiecewiseFn frac() { return named(NamedTag::frac); }
    static PiecewiseFn ga(double a) { return named(NamedTag::g_a, a); }

    // CLI syntax: "angle:a=1,b=1,x0=1" (b,x0 groups repeat), "ga:a=0.5",
    // or one of identity|sqrt|square|min1|frac.
    static PiecewiseFn parse(const std::string& spec);
    std::string to_string() const;

    double evaluate(double x) const;
    double operator()(double x) const { return evaluate(x); }

    FnClass classify() const;

    // strict monotonicity on [0, inf); needed where reparametrisations
    // must not collapse distinct eigenvalues
    bool strictly_increasing() const;

    bool is_named() const { return named_.has_value(); }
    bool is_angle_sum() const { return !named_.has_value(); }
    NamedTag tag() const;
    double param() const;                  // the a of g_a
    double slope() const { return slope_; }
    const std::vector<Kink>& kinks() const { return kinks_; }

private:
    PiecewiseFn() = default;
    std::optional<NamedTag> named_;
    double param_ = 0.0;
    double slope_ = 0.0;
    std::vector<Kink> kinks_;
};

// Sum of two angle sums (kinks at equal x0 merge).  Throws for named
// forms; used by the closure-under-addition property checks.
PiecewiseFn add_angle_sums(const PiecewiseFn& f, const PiecewiseFn& g);

}  // namespace matineq
