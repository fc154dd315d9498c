#include "matineq/scalar_fn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace matineq {

PiecewiseFn PiecewiseFn::named(NamedTag tag, double param) {
    PiecewiseFn f;
    f.named_ = tag;
    f.param_ = param;
    if (tag == NamedTag::g_a && param < 0.0)
        throw std::invalid_argument("PiecewiseFn: ga requires a >= 0");
    return f;
}

PiecewiseFn PiecewiseFn::angle_sum(double slope, std::vector<Kink> kinks) {
    if (!std::isfinite(slope)) throw std::invalid_argument("PiecewiseFn: slope must be finite");
    std::sort(kinks.begin(), kinks.end(), [](const Kink& a, const Kink& b) { return a.x0 < b.x0; });
    for (std::size_t i = 0; i < kinks.size(); ++i) {
        if (!std::isfinite(kinks[i].x0) || !std::isfinite(kinks[i].b))
            throw std::invalid_argument("PiecewiseFn: kinks must be finite");
        if (kinks[i].x0 < 0.0) throw std::invalid_argument("PiecewiseFn: kink positions must be >= 0");
        if (i > 0 && kinks[i].x0 == kinks[i - 1].x0)
            throw std::invalid_argument("PiecewiseFn: kink positions must be distinct");
    }
    PiecewiseFn f;
    f.slope_ = slope;
    f.kinks_ = std::move(kinks);
    return f;
}

NamedTag PiecewiseFn::tag() const {
    if (!named_) throw std::logic_error("PiecewiseFn: not a named function");
    return *named_;
}

double PiecewiseFn::param() const { return param_; }

double PiecewiseFn::evaluate(double x) const {
    if (!std::isfinite(x)) throw std::domain_error("PiecewiseFn: argument must be finite");
    if (named_) {
        switch (*named_) {
            case NamedTag::identity: return x;
            case NamedTag::sqrt_fn:
                if (x < 0.0) throw std::domain_error("PiecewiseFn: sqrt of negative argument");
                return std::sqrt(x);
            case NamedTag::square: return x * x;
            case NamedTag::min1: return std::min(x, 1.0);
            case NamedTag::frac:
                if (x == -1.0) throw std::domain_error("PiecewiseFn: frac undefined at -1");
                return x / (x + 1.0);
            case NamedTag::g_a:
                if (x == -1.0) throw std::domain_error("PiecewiseFn: ga undefined at -1");
                return param_ * x + x * x / (x + 1.0);
        }
        throw std::logic_error("PiecewiseFn: unknown tag");
    }
    double y = slope_ * x;
    for (const Kink& k : kinks_) y += k.b * std::max(x - k.x0, 0.0);
    return y;
}

FnClass PiecewiseFn::classify() const {
    FnClass c;
    if (named_) {
        switch (*named_) {
            case NamedTag::identity:
                c = {true, true, true, true, true};
                break;
            case NamedTag::sqrt_fn:
                c = {true, false, true, true, true};
                break;
            case NamedTag::square:
                c = {true, true, false, true, true};
                break;
            case NamedTag::min1:
                c = {true, false, true, true, true};
                break;
            case NamedTag::frac:
                c = {true, false, true, true, true};
                break;
            case NamedTag::g_a:
                // a*x + x^2/(x+1): second derivative 2/(x+1)^3 > 0 on R+
                c = {true, true, false, true, true};
                break;
        }
        return c;
    }
    c.convex = true;
    c.concave = true;
    for (const Kink& k : kinks_) {
        if (k.b < 0.0) c.convex = false;
        if (k.b > 0.0) c.concave = false;
    }
    // monotone iff the slope of every linear piece is >= 0
    c.monotone_increasing = slope_ >= 0.0;
    double s = slope_;
    for (const Kink& k : kinks_) {
        s += k.b;
        if (s < 0.0) c.monotone_increasing = false;
    }
    // nonnegative on R+ by direct evaluation: the function is linear
    // between kinks, so 0, the kinks, and the final slope decide it
    c.zero_at_zero = evaluate(0.0) == 0.0;
    c.nonnegative_on_plus = evaluate(0.0) >= 0.0 && s >= 0.0;
    for (const Kink& k : kinks_)
        if (evaluate(k.x0) < 0.0) c.nonnegative_on_plus = false;
    return c;
}

bool PiecewiseFn::strictly_increasing() const {
    if (named_) {
        switch (*named_) {
            case NamedTag::identity:
            case NamedTag::sqrt_fn:
            case NamedTag::square:  // on [0, inf)
            case NamedTag::frac:
            case NamedTag::g_a:
                return true;
            case NamedTag::min1:
                return false;
        }
        return false;
    }
    if (slope_ <= 0.0) return false;
    double s = slope_;
    for (const Kink& k : kinks_) {
        s += k.b;
        if (s <= 0.0) return false;
    }
    return true;
}

namespace {

double parse_value(const std::string& token, const std::string& key) {
    auto eq = token.find('=');
    if (eq == std::string::npos || token.substr(0, eq) != key)
        throw std::invalid_argument("PiecewiseFn: expected '" + key + "=<value>' in function spec, got '" +
                                    token + "'");
    const std::string val = token.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(val, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("PiecewiseFn: bad number '" + val + "' in function spec");
    }
    if (used != val.size())
        throw std::invalid_argument("PiecewiseFn: bad number '" + val + "' in function spec");
    return v;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

PiecewiseFn PiecewiseFn::parse(const std::string& spec) {
    if (spec == "identity") return identity();
    if (spec == "sqrt") return sqrt();
    if (spec == "square") return square();
    if (spec == "min1") return min1();
    if (spec == "frac") return frac();
    if (spec.rfind("ga:", 0) == 0) {
        auto toks = split_commas(spec.substr(3));
        if (toks.size() != 1) throw std::invalid_argument("PiecewiseFn: ga spec takes exactly 'a=<value>'");
        return ga(parse_value(toks[0], "a"));
    }
    if (spec.rfind("angle:", 0) == 0) {
        auto toks = split_commas(spec.substr(6));
        if (toks.empty() || (toks.size() - 1) % 2 != 0)
            throw std::invalid_argument("PiecewiseFn: angle spec is 'angle:a=..,b=..,x0=..[,b=..,x0=..]*'");
        double slope = parse_value(toks[0], "a");
        std::vector<Kink> kinks;
        for (std::size_t i = 1; i + 1 < toks.size(); i += 2)
            kinks.push_back({parse_value(toks[i + 1], "x0"), parse_value(toks[i], "b")});
        return angle_sum(slope, std::move(kinks));
    }
    throw std::invalid_argument("PiecewiseFn: unknown function spec '" + spec + "'");
}

std::string PiecewiseFn::to_string() const {
    if (named_) {
        switch (*named_) {
            case NamedTag::identity: return "identity";
            case NamedTag::sqrt_fn: return "sqrt";
            case NamedTag::square: return "square";
            case NamedTag::min1: return "min1";
            case NamedTag::frac: return "frac";
            case NamedTag::g_a: return "ga:a=" + format_number(param_);
        }
        return "?";
    }
    std::string s = "angle:a=" + format_number(slope_);
    for (const Kink& k : kinks_) s += ",b=" + format_number(k.b) + ",x0=" + format_number(k.x0);
    return s;
}

PiecewiseFn add_angle_sums(const PiecewiseFn& f, const PiecewiseFn& g) {
    if (!f.is_angle_sum() || !g.is_angle_sum())
        throw std::invalid_argument("add_angle_sums: both operands must be angle sums");
    std::vector<Kink> kinks = f.kinks();
    for (const Kink& k : g.kinks()) {
        auto it = std::find_if(kinks.begin(), kinks.end(), [&](const Kink& e) { return e.x0 == k.x0; });
        if (it != kinks.end())
            it->b += k.b;
        else
            kinks.push_back(k);
    }
    return PiecewiseFn::angle_sum(f.slope() + g.slope(), std::move(kinks));
}

}  // namespace matineq
