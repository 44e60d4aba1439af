#include "leafspace/quad.hpp"

#include <cstdlib>
#include <sstream>

namespace leafspace {

namespace {

bool square_free(long d) {
    for (long j = 2; j * j <= d; ++j)
        if (d % (j * j) == 0)
            return false;
    return true;
}

}  // namespace

QuadScalar::QuadScalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d < 1 || !square_free(d))
        throw std::invalid_argument("discriminant must be a square-free positive integer, got " +
                                    std::to_string(d));
    a_.canonicalize();
    b_.canonicalize();
    if (d_ == 1) {  // sqrt(1) = 1: fold into the rational part
        a_ += b_;
        b_ = 0;
    }
}

void QuadScalar::check_same_field(const QuadScalar& o) const {
    if (d_ != o.d_)
        throw FieldMismatchError("scalars from different fields: Q(√" + std::to_string(d_) +
                                 ") vs Q(√" + std::to_string(o.d_) + ")");
}

bool QuadScalar::is_integer() const {
    return b_ == 0 && a_.get_den() == 1;
}

long QuadScalar::to_integer() const {
    if (!is_integer())
        throw std::domain_error("not an integer: " + str());
    return a_.get_num().get_si();
}

int QuadScalar::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // Mixed signs: compare a^2 with d*b^2 (both sides positive).
    const Rational lhs = a_ * a_;
    const Rational rhs = Rational(d_) * b_ * b_;
    const int cmp2 = cmp(lhs, rhs);
    return cmp2 == 0 ? 0 : (cmp2 > 0 ? sa : sb);
}

QuadScalar QuadScalar::operator-() const {
    return QuadScalar(-a_, -b_, d_);
}

QuadScalar QuadScalar::operator+(const QuadScalar& o) const {
    check_same_field(o);
    return QuadScalar(a_ + o.a_, b_ + o.b_, d_);
}

QuadScalar QuadScalar::operator-(const QuadScalar& o) const {
    check_same_field(o);
    return QuadScalar(a_ - o.a_, b_ - o.b_, d_);
}

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
    check_same_field(o);
    return QuadScalar(a_ * o.a_ + Rational(d_) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d_);
}

QuadScalar QuadScalar::operator/(const QuadScalar& o) const {
    check_same_field(o);
    if (o.is_zero())
        throw std::domain_error("division by zero in Q(√" + std::to_string(d_) + ")");
    // 1/(a+b√d) = (a-b√d)/(a^2-d b^2); the norm vanishes only at zero.
    const Rational norm = o.a_ * o.a_ - Rational(d_) * o.b_ * o.b_;
    return QuadScalar((a_ * o.a_ - Rational(d_) * b_ * o.b_) / norm, (b_ * o.a_ - a_ * o.b_) / norm,
                      d_);
}

bool QuadScalar::operator==(const QuadScalar& o) const {
    check_same_field(o);
    return a_ == o.a_ && b_ == o.b_;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

std::string QuadScalar::str() const {
    if (b_ == 0)
        return rational_str(a_);
    std::string radical;
    if (b_ == 1)
        radical = "";
    else if (b_ == -1)
        radical = "-";
    else
        radical = rational_str(b_);
    radical += "√" + std::to_string(d_);
    if (a_ == 0)
        return radical;
    if (sgn(b_) > 0)
        return rational_str(a_) + "+" + radical;
    return rational_str(a_) + radical;  // '-' carried by the radical part
}

namespace {

// rational := digits ['/' digits]
bool parse_rational(const std::string& s, size_t& pos, Rational& out) {
    size_t start = pos;
    size_t digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos == digits_begin) {
        pos = start;
        return false;
    }
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t den_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == den_begin) {
            pos = start;
            return false;
        }
    }
    out = Rational(s.substr(start, pos - start));
    if (out.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal");
    out.canonicalize();
    return true;
}

const std::string kRootSign = "√";  // √

bool parse_root(const std::string& s, size_t& pos) {
    if (s.compare(pos, kRootSign.size(), kRootSign) == 0) {
        pos += kRootSign.size();
        return true;
    }
    return false;
}

}  // namespace

QuadScalar QuadScalar::parse(const std::string& text, long d) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty scalar literal");

    size_t pos = 0;
    Rational a(0), b(0);
    bool saw_radical = false;

    auto parse_term = [&](bool first) {
        int term_sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            term_sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in scalar literal \"" + text + "\"");
        }
        Rational coeff(1);
        bool has_coeff = parse_rational(s, pos, coeff);
        if (parse_root(s, pos)) {
            size_t rad_begin = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            if (pos == rad_begin)
                throw std::invalid_argument("missing radicand in scalar literal \"" + text + "\"");
            long rad = std::strtol(s.substr(rad_begin, pos - rad_begin).c_str(), nullptr, 10);
            if (rad != d)
                throw std::invalid_argument("radicand " + std::to_string(rad) +
                                            " does not match session discriminant " +
                                            std::to_string(d));
            if (saw_radical)
                throw std::invalid_argument("repeated radical term in scalar literal \"" + text +
                                            "\"");
            saw_radical = true;
            b = term_sign * coeff;
        } else if (has_coeff) {
            a = term_sign * coeff;
        } else {
            throw std::invalid_argument("cannot parse scalar literal \"" + text + "\"");
        }
    };

    parse_term(true);
    if (pos < s.size())
        parse_term(false);
    if (pos < s.size())
        throw std::invalid_argument("trailing characters in scalar literal \"" + text + "\"");
    return QuadScalar(a, b, d);
}

QuadVector operator+(const QuadVector& x, const QuadVector& y) {
    if (x.size() != y.size())
        throw DimensionError("vector length mismatch");
    QuadVector r;
    r.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        r.push_back(x[i] + y[i]);
    return r;
}

QuadVector operator-(const QuadVector& x, const QuadVector& y) {
    if (x.size() != y.size())
        throw DimensionError("vector length mismatch");
    QuadVector r;
    r.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        r.push_back(x[i] - y[i]);
    return r;
}

QuadVector operator*(const QuadScalar& c, const QuadVector& x) {
    QuadVector r;
    r.reserve(x.size());
    for (const auto& e : x)
        r.push_back(c * e);
    return r;
}

QuadScalar dot(const QuadVector& x, const QuadVector& y) {
    if (x.size() != y.size())
        throw DimensionError("vector length mismatch in dot product");
    if (x.empty())
        throw DimensionError("dot product of empty vectors has no field to live in");
    QuadScalar acc = QuadScalar::zero(x[0].discriminant());
    for (size_t i = 0; i < x.size(); ++i)
        acc += x[i] * y[i];
    return acc;
}

bool is_zero(const QuadVector& x) {
    for (const auto& e : x)
        if (!e.is_zero())
            return false;
    return true;
}

}  // namespace leafspace
