#include "greenbox/cells/scalar.hpp"

namespace greenbox::cells {

std::string ring_name(RingTag r) {
    switch (r) {
        case RingTag::PolyDelta: return "Z[d]";
        case RingTag::RationalDelta: return "Q (d specialized)";
        case RingTag::Laurent: return "Z[v,v^-1]";
        case RingTag::Rationals: return "Q";
    }
    return "?";
}

bool is_zero(const Scalar& s) {
    return std::visit([](const auto& x) { return arith::is_zero(x); }, s);
}

std::string to_string(const Scalar& s) {
    struct V {
        std::string operator()(const Rational& q) const { return q.get_str(); }
        std::string operator()(const IntPoly& p) const { return arith::to_string(p, "d"); }
        std::string operator()(const LaurentInt& l) const { return l.to_string("v"); }
    };
    return std::visit(V{}, s);
}

}  // namespace greenbox::cells
